#include <doctest.h>

#include <thread>

#include "morphoword/streams.hpp"
#include "test_util.hpp"

using namespace morphoword;
namespace tu = testutil;

TEST_CASE("cycle, from_function, prepend") {
  auto abc = tu::alphabet({"a", "b", "c"});
  CHECK(InfiniteWord::cycle(tu::word(abc, "ab")).take(5).str() == "ababa");
  CHECK_THROWS_AS(InfiniteWord::cycle(Word(abc, {})), error);

  auto a01 = tu::alphabet({"0", "1"});
  InfiniteWord alt = InfiniteWord::from_function(
      a01, [](std::size_t i) { return static_cast<Letter>(i % 2); });
  CHECK(alt.take(4).str() == "0101");

  InfiniteWord pre =
      InfiniteWord::prepend(tu::word(abc, "ab"), InfiniteWord::cycle(tu::word(abc, "c")));
  CHECK(pre.at(2) == abc->require("c"));
  CHECK(pre.take(4).str() == "abcc");

  InfiniteWord tail = InfiniteWord::cycle(tu::word(abc, "ab"));
  CHECK(InfiniteWord::prepend(Word(abc, {}), tail).take(10) == tail.take(10));
  CHECK_THROWS_AS(
      InfiniteWord::prepend(tu::word(tu::alphabet({"x"}), "x"), tail),
      alphabet_mismatch_error);
}

TEST_CASE("prepend associativity on prefixes") {
  auto ab = tu::alphabet({"a", "b"});
  InfiniteWord s = InfiniteWord::cycle(tu::word(ab, "ba"));
  Word u = tu::word(ab, "ab"), v = tu::word(ab, "bba");
  CHECK(InfiniteWord::prepend(concat(u, v), s).take(40) ==
        InfiniteWord::prepend(u, InfiniteWord::prepend(v, s)).take(40));
}

TEST_CASE("take/drop decomposition and memo stability") {
  auto a01 = tu::alphabet({"0", "1"});
  InfiniteWord tm = InfiniteWord::fixed_point(tu::thue_morse(), 0);
  const Word whole = tm.take(48);
  for (std::size_t n : {std::size_t{0}, std::size_t{7}, std::size_t{16}}) {
    Word head = tm.take(n);
    Word tail = InfiniteWord::drop(tm, n).take(48 - n);
    CHECK(concat(head, tail) == whole);
  }
  for (std::size_t i = 0; i < 48; ++i) CHECK(tm.at(i) == whole[i]);
}

TEST_CASE("morph_image") {
  Morphism tm = tu::thue_morse();
  InfiniteWord zeros = InfiniteWord::cycle(tu::word(tm.source(), "0"));
  CHECK(InfiniteWord::morph_image(tm, zeros).take(6).str() == "010101");

  Morphism skip = Morphism::parse("a -> eps; b -> c");
  InfiniteWord abab = InfiniteWord::cycle(tu::word(skip.source(), "ab"));
  CHECK(InfiniteWord::morph_image(skip, abab).take(3).str() == "ccc");

  Morphism dead = Morphism::parse("a -> eps");
  InfiniteWord as = InfiniteWord::cycle(tu::word(dead.source(), "a"));
  InfiniteWord image = InfiniteWord::morph_image(dead, as, 1000);
  CHECK_THROWS_WITH_AS(image.take(1), doctest::Contains("1000"),
                       fuel_exhausted_error);
}

TEST_CASE("fixed points") {
  InfiniteWord tm = InfiniteWord::fixed_point(tu::thue_morse(), 0);
  CHECK(tm.take(8).str() == "01101001");

  InfiniteWord fib = InfiniteWord::fixed_point(tu::fibonacci(), 0);
  CHECK(fib.take(8).str() == "01001010");

  Morphism ab = Morphism::parse("a -> a b; b -> b");
  CHECK(InfiniteWord::fixed_point(ab, 0).take(5).str() == "abbbb");

  CHECK_THROWS_AS(InfiniteWord::fixed_point(Morphism::parse("a -> a"), 0),
                  error);
}

TEST_CASE("fixed point equation on long prefixes") {
  for (Morphism f : {tu::thue_morse(), tu::fibonacci()}) {
    InfiniteWord u = InfiniteWord::fixed_point(f, 0);
    CHECK(InfiniteWord::morph_image(f, u).take(10000) == u.take(10000));
  }
  // A prolongable morphism with an erasing letter.
  Morphism f = Morphism::parse("a -> a b a; b -> eps");
  InfiniteWord u = InfiniteWord::fixed_point(f, 0);
  CHECK(InfiniteWord::morph_image(f, u).take(2000) == u.take(2000));
}

TEST_CASE("stream prefix and windowed factor tests") {
  InfiniteWord tm = InfiniteWord::fixed_point(tu::thue_morse(), 0);
  auto a01 = tm.alphabet();
  CHECK(is_prefix_of_stream(tu::word(a01, "011"), tm));
  CHECK(!is_prefix_of_stream(tu::word(a01, "00"), tm));
  CHECK(is_prefix_of_stream(Word(a01, {}), tm));

  InfiniteWord fib = InfiniteWord::fixed_point(tu::fibonacci(), 0);
  CHECK(!occurs_in_prefix(tu::word(a01, "11"), fib, 1000));
  CHECK(occurs_in_prefix(tu::word(a01, "00"), fib, 1000));
  CHECK(occurs_in_prefix(Word(a01, {}), fib, 10));
  CHECK_THROWS_AS(occurs_in_prefix(tu::word(a01, "11"), fib, 1), error);
}

TEST_CASE("word_language_upto completeness certificates") {
  auto ab = tu::alphabet({"a", "b"});
  LanguageSample cyc =
      word_language_upto(InfiniteWord::cycle(tu::word(ab, "ab")), 2, 6);
  CHECK(cyc.complete);
  WordSet expect;
  for (const char* t : {"eps", "a", "b", "ab", "ba"}) {
    expect.insert(tu::word(ab, t));
  }
  CHECK(cyc.words == expect);

  // Window narrower than 2|u|+n: same words here, but no certificate.
  LanguageSample narrow =
      word_language_upto(InfiniteWord::cycle(tu::word(ab, "ab")), 2, 5);
  CHECK(!narrow.complete);

  InfiniteWord tm = InfiniteWord::fixed_point(tu::thue_morse(), 0);
  LanguageSample tml = word_language_upto(tm, 2, 32);
  CHECK(tml.complete);  // certified against the purely morphic sample
  CHECK(tml.words.size() == 7);

  LanguageSample tiny = word_language_upto(tm, 2, 4);  // too small a window
  CHECK(!tiny.complete);

  auto aa = tu::alphabet({"a"});
  LanguageSample unary =
      word_language_upto(InfiniteWord::cycle(tu::word(aa, "a")), 3, 8);
  CHECK(unary.complete);
  CHECK(unary.words.size() == 4);
}

TEST_CASE("factor_complexity") {
  auto abc = tu::alphabet({"a", "b", "c"});
  InfiniteWord cyc = InfiniteWord::cycle(tu::word(abc, "abcabc"));
  FactorCount fc = factor_complexity(cyc, 5, 64);
  CHECK(fc.exact);
  CHECK(fc.count == 3);
  CHECK(factor_complexity(cyc, 0, 64).count == 1);

  InfiniteWord fib = InfiniteWord::fixed_point(tu::fibonacci(), 0);
  FactorCount f4 = factor_complexity(fib, 4, 200);
  CHECK(f4.count == 5);
  CHECK(f4.exact);
}

TEST_CASE("cycle complexity is capped by the primitive root length") {
  // Exhaustive over words of length <= 5 on two letters.
  auto ab = tu::alphabet({"a", "b"});
  for (const auto& ids : tu::all_letter_vectors(2, 1, 5)) {
    Word w(ab, ids);
    const std::size_t rho = primitive_root(w).root.size();
    InfiniteWord cyc = InfiniteWord::cycle(w);
    for (std::size_t n = 0; n <= 8; ++n) {
      FactorCount fc = factor_complexity(cyc, n, 2 * w.size() + n);
      REQUIRE(fc.exact);
      CHECK(fc.count <= rho);
      if (n >= rho) CHECK(fc.count == rho);
    }
  }
}

TEST_CASE("detect_periodicity") {
  auto ab = tu::alphabet({"a", "b", "c"});
  PeriodicityReport pp =
      detect_periodicity(InfiniteWord::cycle(tu::word(ab, "abab")), 8, 64);
  CHECK(pp.status == PeriodicityReport::Status::PurelyPeriodic);
  CHECK(pp.period == 2);
  CHECK(pp.str() == "PurelyPeriodic(2)");

  PeriodicityReport ep = detect_periodicity(
      InfiniteWord::prepend(tu::word(ab, "c"),
                            InfiniteWord::cycle(tu::word(ab, "ab"))),
      8, 64);
  CHECK(ep.status == PeriodicityReport::Status::EventuallyPeriodic);
  CHECK(ep.preperiod == 1);
  CHECK(ep.period == 2);
  CHECK(ep.str() == "EventuallyPeriodic(1,2)");

  InfiniteWord tm = InfiniteWord::fixed_point(tu::thue_morse(), 0);
  PeriodicityReport np = detect_periodicity(tm, 20, 200);
  CHECK(np.status == PeriodicityReport::Status::NoPeriodFound);
  CHECK(np.str() == "NoPeriodFound(maxPeriod=20,window=200)");

  CHECK_THROWS_AS(detect_periodicity(tm, 20, 30), error);
}

TEST_CASE("concurrent forcing is consistent") {
  InfiniteWord tm = InfiniteWord::fixed_point(tu::thue_morse(), 0);
  const Word expect = InfiniteWord::fixed_point(tu::thue_morse(), 0).take(4000);
  std::vector<std::thread> threads;
  std::vector<Word> results(4);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] { results[t] = tm.take(4000); });
  }
  for (auto& th : threads) th.join();
  for (const Word& r : results) CHECK(r == expect);
}
