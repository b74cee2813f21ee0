#include <doctest.h>

#include "morphoword/oracle.hpp"
#include "test_util.hpp"

using namespace morphoword;
namespace tu = testutil;

TEST_CASE("brute_force_factors") {
  Morphism tm = tu::thue_morse();
  const Word zero = tu::word(tm.source(), "0");
  WordSet depth4 = brute_force_factors(tm, zero, 4, 2);
  CHECK(depth4.size() == 7);
  for (const char* t : {"eps", "0", "1", "00", "01", "10", "11"}) {
    CHECK(depth4.count(tu::word(tm.source(), t)) == 1);
  }

  WordSet depth0 = brute_force_factors(tm, zero, 0, 9);
  CHECK(depth0 == factors_upto(zero, 9));

  Morphism erase = Morphism::parse("a -> eps");
  WordSet collapsed =
      brute_force_factors(erase, tu::word(erase.source(), "a"), 3, 3);
  CHECK(collapsed.size() == 2);

  // Monotone in depth.
  Morphism fib = tu::fibonacci();
  WordSet prev;
  for (std::size_t depth = 0; depth <= 6; ++depth) {
    WordSet cur = brute_force_factors(fib, zero, depth, 4);
    for (const Word& w : prev) CHECK(cur.count(w) == 1);
    prev = std::move(cur);
  }

  EnumLimits tight;
  tight.max_cells = 10;
  CHECK_THROWS_AS(
      brute_force_factors(Morphism::parse("a -> a a"),
                          tu::word(Morphism::parse("a -> a a").source(), "a"),
                          20, 3, tight),
      limit_exceeded_error);
}

TEST_CASE("brute_force_factors_stabilized") {
  Morphism tm = tu::thue_morse();
  StabilizedFactors s =
      brute_force_factors_stabilized(tm, tu::word(tm.source(), "0"), 2, 40);
  CHECK(s.stabilized);
  CHECK(s.words.size() == 7);
  CHECK(s.depth <= 10);
}

TEST_CASE("brute_force_bounded verdicts and witnesses") {
  Morphism swap = Morphism::parse("a -> b; b -> a");
  TriState cyc = brute_force_bounded(swap, 0, 16, 8);
  REQUIRE(cyc.conclusive());
  CHECK(cyc.value());
  CHECK(cyc.witness.find("f^0(a)") != std::string::npos);
  CHECK(cyc.witness.find("f^2(a)") != std::string::npos);

  Morphism dbl = Morphism::parse("a -> a a");
  TriState growing = brute_force_bounded(dbl, 0, 16, 8);
  REQUIRE(growing.conclusive());
  CHECK(!growing.value());
  CHECK(growing.witness.find("immortal") != std::string::npos);

  Morphism half = Morphism::parse("a -> a b; b -> eps");
  TriState tiny = brute_force_bounded(half, 0, 1, 8);
  CHECK(!tiny.conclusive());
  CHECK_THROWS_AS(tiny.value(), error);
  // With room to iterate, the cycle a -> ab -> ab appears.
  TriState ok = brute_force_bounded(half, 0, 4, 8);
  REQUIRE(ok.conclusive());
  CHECK(ok.value());
}

TEST_CASE("brute_force_pushy verdicts") {
  Morphism pump = Morphism::parse("a -> a b b; b -> b");
  TriState yes = brute_force_pushy(pump, tu::word(pump.source(), "a"), 32, 8);
  REQUIRE(yes.conclusive());
  CHECK(yes.value());
  CHECK(yes.witness.find("bbbbbbbb") != std::string::npos);

  Morphism dbl = Morphism::parse("a -> a a");
  TriState no = brute_force_pushy(dbl, tu::word(dbl.source(), "a"), 32, 8);
  REQUIRE(no.conclusive());
  CHECK(!no.value());

  Morphism split = Morphism::parse("a -> a b a; b -> b");
  TriState separated =
      brute_force_pushy(split, tu::word(split.source(), "a"), 32, 8);
  REQUIRE(separated.conclusive());
  CHECK(!separated.value());
  CHECK(separated.witness.find("stabilized") != std::string::npos);
}

TEST_CASE("counterexample report serialization") {
  CounterexampleReport report;
  report.check = "is_pushy";
  report.morphism = "a -> a b\n";
  report.axiom = "a";
  report.symbolic = "pushy";
  report.oracle = "not pushy";
  report.witness = "bounded factor set stabilized";
  const std::string json = report.to_json();
  for (const char* needle :
       {"\"check\"", "is_pushy", "\"axiom\"", "\"witness\"", "stabilized"}) {
    CAPTURE(needle);
    CHECK(json.find(needle) != std::string::npos);
  }
  CHECK_THROWS_AS(fail_verification(report), verification_error);
  try {
    fail_verification(report);
  } catch (const verification_error& e) {
    CHECK(e.report() == json);
  }
}

TEST_CASE("pushy oracle agrees with is_pushy on the small exhaustive space") {
  auto ab = tu::alphabet({"a", "b"});
  std::size_t conclusive = 0, total = 0;
  for (const Morphism& f : tu::all_endomorphisms(ab, 2)) {
    for (const char* axiom_text : {"a", "ab"}) {
      const Word axiom = tu::word(ab, axiom_text);
      ++total;
      TriState verdict;
      try {
        verdict = brute_force_pushy(f, axiom, 32,
                                    std::max<std::size_t>(8, 2 * axiom.size() + 4));
      } catch (const limit_exceeded_error&) {
        continue;
      }
      if (!verdict.conclusive()) continue;
      ++conclusive;
      CHECK(verdict.value() == is_pushy(f, axiom));
    }
  }
  // The sweep must actually decide nearly everything to mean anything.
  CHECK(conclusive * 10 >= total * 9);
}
