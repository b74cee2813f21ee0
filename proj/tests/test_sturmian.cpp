#include <doctest.h>

#include <random>

#include "morphoword/oracle.hpp"
#include "morphoword/sturmian.hpp"
#include "test_util.hpp"

using namespace morphoword;
namespace tu = testutil;

namespace {

ExactNumber fib_slope() { return ExactNumber::surd(3, -1, 5, 2); }  // (3-sqrt5)/2

bool is_square(std::int64_t x) {
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(double(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x;
}

std::int64_t floor_with_retries(const ExactNumber& x) {
  for (unsigned digits = 50; digits <= 200; digits *= 2) {
    try {
      return decimal_floor_oracle(x, digits);
    } catch (const overflow_error&) {
      throw;
    } catch (const error&) {
      continue;  // too close to an integer at this precision
    }
  }
  throw error("decimal oracle kept demanding more digits");
}

}  // namespace

TEST_CASE("literal grammar round trips") {
  CHECK(ExactNumber::parse("7/2") == ExactNumber::rational(7, 2));
  CHECK(ExactNumber::parse("-3") == ExactNumber::rational(-3));
  CHECK(ExactNumber::parse("(3-1*sqrt(5))/2") == fib_slope());
  CHECK(ExactNumber::parse("(-1+1*sqrt(2))/1") == ExactNumber::surd(-1, 1, 2, 1));
  CHECK(ExactNumber::parse(" ( 3 - 1*sqrt(5) ) / 2 ") == fib_slope());
  CHECK(fib_slope().str() == "(3-1*sqrt(5))/2");
  CHECK(ExactNumber::rational(7, 2).str() == "7/2");
  CHECK(ExactNumber::rational(4).str() == "4");
  for (const char* bad : {"", "x", "1/0", "(1+2*sqrt(5)/2", "3/", "1/2/3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ExactNumber::parse(bad), error);
  }
}

TEST_CASE("normalization") {
  // Square factors leave the radicand.
  CHECK(ExactNumber::surd(0, 1, 12, 1) == ExactNumber::surd(0, 2, 3, 1));
  // Radical part collapsing to rational.
  CHECK(ExactNumber::surd(1, 2, 4, 2) == ExactNumber::rational(5, 2));
  CHECK(ExactNumber::surd(1, 1, 1, 1) == ExactNumber::rational(2));
  CHECK(ExactNumber::surd(2, 0, 7, 4) == ExactNumber::rational(1, 2));
  // Common factors and sign of the denominator.
  CHECK(ExactNumber::rational(2, -4) == ExactNumber::rational(-1, 2));
  CHECK(ExactNumber::surd(2, 2, 5, -4) == ExactNumber::surd(-1, -1, 5, 2));
  CHECK_THROWS_AS(ExactNumber::rational(1, 0), error);
  CHECK_THROWS_AS(ExactNumber::surd(0, 1, -2, 1), error);
}

TEST_CASE("comparisons are exact in every sign configuration") {
  const ExactNumber sqrt5 = ExactNumber::surd(0, 1, 5, 1);
  CHECK(sqrt5 > ExactNumber::rational(2));
  CHECK(sqrt5 < ExactNumber::rational(9, 4));
  CHECK(ExactNumber::surd(3, -1, 5, 2) > ExactNumber::rational(0));   // 0.38..
  CHECK(ExactNumber::surd(2, -1, 5, 1) < ExactNumber::rational(0));   // -0.23..
  CHECK(ExactNumber::surd(-2, 1, 5, 1) > ExactNumber::rational(0));   // 0.23..
  CHECK(ExactNumber::surd(-3, 1, 5, 1) < ExactNumber::rational(0));
  CHECK(ExactNumber::surd(3, -1, 5, 2) < ExactNumber::rational(2, 5));
  CHECK(ExactNumber::surd(3, -1, 5, 2) > ExactNumber::rational(3, 8));
  // Equal values in different spellings.
  CHECK(ExactNumber::surd(6, -2, 5, 4) == fib_slope());
  // Different radicands never compare equal, and their sums are rejected.
  CHECK(ExactNumber::surd(0, 1, 2, 1) != ExactNumber::surd(0, 1, 3, 1));
  CHECK_THROWS_AS(ExactNumber::surd(0, 1, 2, 1) + ExactNumber::surd(0, 1, 3, 1),
                  error);
}

TEST_CASE("exact_floor frozen examples") {
  CHECK(exact_floor(ExactNumber::rational(7, 2)) == 3);
  CHECK(exact_floor(ExactNumber::rational(-7, 2)) == -4);
  CHECK(exact_floor(ExactNumber::surd(0, 1, 5, 1)) == 2);
  CHECK(exact_floor(fib_slope()) == 0);
  CHECK(exact_floor(ExactNumber::surd(0, -1, 5, 1)) == -3);
}

TEST_CASE("exact_floor separates near-integer surds") {
  // Pell pair: 63018038201^2 - 2*44560482149^2 = -1, so the value is
  // about 7.9e-12 above zero.
  const ExactNumber tiny = ExactNumber::surd(-63018038201, 44560482149, 2, 1);
  CHECK(exact_floor(tiny) == 0);
  CHECK(exact_floor(ExactNumber::rational(0) - tiny) == -1);
  // The 20-digit decimal bracket cannot separate it and must say so.
  CHECK_THROWS_WITH_AS(decimal_floor_oracle(tiny, 20),
                       doctest::Contains("more digits"), error);
  CHECK(decimal_floor_oracle(tiny, 40) == 0);
}

TEST_CASE("decimal_floor_oracle frozen examples") {
  CHECK(decimal_floor_oracle(fib_slope(), 50) == 0);
  CHECK(decimal_floor_oracle(ExactNumber::rational(7, 2), 50) == 3);
  CHECK(decimal_floor_oracle(ExactNumber::surd(0, 1, 5, 1), 50) == 2);
  CHECK_THROWS_AS(decimal_floor_oracle(fib_slope(), 19), error);
}

TEST_CASE("exact_floor agrees with the decimal oracle on random surds") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::int64_t> ab(-1'000'000, 1'000'000);
  std::uniform_int_distribution<std::int64_t> dd(2, 1000), cc(1, 1000);
  int done = 0;
  while (done < 300) {
    std::int64_t a = ab(rng), b = ab(rng), d = dd(rng), c = cc(rng);
    if (b == 0 || is_square(d)) continue;
    const ExactNumber x = ExactNumber::surd(a, b, d, c);
    if (x.is_rational()) {
      CHECK(exact_floor(x) == floor_with_retries(x));
    } else {
      CHECK(exact_floor(x) == floor_with_retries(x));
    }
    ++done;
  }
}

TEST_CASE("lower_mechanical_letter rows") {
  const ExactNumber half = ExactNumber::rational(1, 2), zero;
  for (std::int64_t n : {0, 1, 2, 3}) {
    CHECK(lower_mechanical_letter(half, zero, n) == n % 2);
  }
  for (std::int64_t n : {0, 5, 17}) {
    CHECK(lower_mechanical_letter(zero, ExactNumber::rational(2, 7), n) == 0);
  }
  const ExactNumber phi2 = fib_slope();
  const std::int64_t expect[] = {0, 1, 0, 0, 1};
  for (std::int64_t n = 0; n < 5; ++n) {
    CHECK(lower_mechanical_letter(phi2, phi2, n) == expect[n]);
  }
  // Integer slope: every letter equals the slope.
  for (std::int64_t n : {0, 1, 9}) {
    CHECK(lower_mechanical_letter(ExactNumber::rational(3), zero, n) == 3);
  }
}

TEST_CASE("lower_mechanical_word") {
  CHECK(lower_mechanical_word(ExactNumber::rational(1, 2), ExactNumber())
            .take(6)
            .str() == "010101");
  // Telescoping count of ones in a prefix.
  InfiniteWord two_fifths =
      lower_mechanical_word(ExactNumber::rational(2, 5), ExactNumber());
  Word prefix = two_fifths.take(5);
  int ones = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix.alphabet()->name(prefix[i]) == "1") ++ones;
  }
  CHECK(ones == 2);

  // Fibonacci morphism fixed point and the mechanical word with slope and
  // intercept (3-sqrt5)/2 agree letter for letter.
  InfiniteWord mech = lower_mechanical_word(fib_slope(), fib_slope());
  InfiniteWord fib = InfiniteWord::fixed_point(tu::fibonacci(), 0);
  CHECK(mech.take(13) == fib.take(13));

  // Negative slope: letters are floor(alpha) and floor(alpha)+1.
  InfiniteWord neg =
      lower_mechanical_word(ExactNumber::rational(-1, 2), ExactNumber());
  CHECK(neg.alphabet()->names() == std::vector<std::string>{"-1", "0"});
  Word np = neg.take(4);
  CHECK(np.str() == "-1 0 -1 0");
}

TEST_CASE("telescoping sum invariant") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> small(-40, 40), den(1, 12),
      rad(2, 30), nn(1, 400);
  for (int trial = 0; trial < 120; ++trial) {
    ExactNumber alpha, beta;
    if (trial % 3 == 0) {
      alpha = ExactNumber::rational(small(rng), den(rng));
      beta = ExactNumber::rational(small(rng), den(rng));
    } else {
      std::int64_t d = rad(rng);
      if (is_square(d)) d += 1;
      if (is_square(d)) d += 1;
      alpha = ExactNumber::surd(small(rng), small(rng) * 2 + 1, d, den(rng));
      beta = trial % 3 == 1 ? ExactNumber::rational(small(rng), den(rng))
                            : ExactNumber::surd(small(rng), small(rng) * 2 + 1,
                                                d, den(rng));
    }
    const std::int64_t n = nn(rng);
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      sum += lower_mechanical_letter(alpha, beta, i);
    }
    CHECK(sum == exact_floor(n * alpha + beta) - exact_floor(beta));
  }
}

TEST_CASE("letter range and balance") {
  const ExactNumber slopes[] = {
      fib_slope(), ExactNumber::surd(-1, 1, 2, 1),
      ExactNumber::surd(2, -1, 2, 2), ExactNumber::rational(3, 7)};
  for (const ExactNumber& alpha : slopes) {
    const std::int64_t base = exact_floor(alpha);
    std::vector<std::int64_t> letters;
    for (std::int64_t i = 0; i < 240; ++i) {
      const std::int64_t s = lower_mechanical_letter(alpha, ExactNumber(), i);
      CHECK((s == base || s == base + 1));
      letters.push_back(s);
    }
    // Balance: sums of equal-length windows differ by at most 1.
    for (std::size_t len : {std::size_t{1}, std::size_t{4}, std::size_t{9}}) {
      std::int64_t lo = INT64_MAX, hi = INT64_MIN;
      std::int64_t window = 0;
      for (std::size_t i = 0; i < letters.size(); ++i) {
        window += letters[i];
        if (i + 1 >= len) {
          lo = std::min(lo, window);
          hi = std::max(hi, window);
          window -= letters[i + 1 - len];
        }
      }
      CHECK(hi - lo <= 1);
    }
  }
}

TEST_CASE("rational slopes are purely periodic with period dividing q") {
  for (std::int64_t q = 1; q <= 12; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (const ExactNumber& beta :
           {ExactNumber(), ExactNumber::rational(1, 3),
            ExactNumber::rational(1, 2)}) {
        PeriodicityReport report = rational_periodicity_check(
            ExactNumber::rational(p, q), beta, 64);
        CAPTURE(p);
        CAPTURE(q);
        REQUIRE(report.status == PeriodicityReport::Status::PurelyPeriodic);
        CHECK(static_cast<std::int64_t>(report.period) <= q);
        CHECK(q % static_cast<std::int64_t>(report.period) == 0);
      }
    }
  }
  CHECK(rational_periodicity_check(ExactNumber::rational(1, 2), ExactNumber(), 64)
            .period == 2);
  CHECK(rational_periodicity_check(ExactNumber::rational(3), ExactNumber(), 64)
            .period == 1);
  CHECK_THROWS_AS(
      rational_periodicity_check(fib_slope(), ExactNumber(), 64), error);
}

TEST_CASE("surd slopes show no period") {
  const ExactNumber slopes[] = {fib_slope(), ExactNumber::surd(-1, 1, 2, 1),
                                ExactNumber::surd(2, -1, 2, 2)};
  for (const ExactNumber& alpha : slopes) {
    PeriodicityReport report =
        aperiodicity_evidence(alpha, ExactNumber(), 30, 300);
    CHECK(report.status == PeriodicityReport::Status::NoPeriodFound);
  }
  CHECK_THROWS_AS(
      aperiodicity_evidence(ExactNumber::rational(1, 2), ExactNumber(), 30, 300),
      error);
}

TEST_CASE("sturmian factor complexity is n+1") {
  InfiniteWord mech = lower_mechanical_word(fib_slope(), fib_slope());
  for (std::size_t n = 1; n <= 6; ++n) {
    FactorCount fc = factor_complexity(mech, n, 1000);
    CHECK(fc.count == n + 1);  // window large enough; lower bound is tight
  }
}
