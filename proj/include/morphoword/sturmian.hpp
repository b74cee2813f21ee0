// Exact-arithmetic lower mechanical words and the rationality/periodicity
// correspondence. No floating point anywhere: slopes and intercepts are
// rationals or quadratic surds with exact floor and comparison.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "morphoword/streams.hpp"

namespace morphoword {

/// A rational p/q or a quadratic surd (a + b*sqrt(d))/c, stored in a
/// canonical form: denominators positive, fractions in lowest terms, d
/// square-free and at least 2, b never zero for surds. Values whose radical
/// part cancels collapse to rationals automatically.
class ExactNumber {
 public:
  ExactNumber() = default;  // zero

  static ExactNumber rational(std::int64_t p, std::int64_t q = 1);
  static ExactNumber surd(std::int64_t a, std::int64_t b, std::int64_t d,
                          std::int64_t c);

  /// Literal grammar: `p`, `p/q`, or `(a+b*sqrt(d))/c` with optional signs,
  /// e.g. `(3-1*sqrt(5))/2`.
  static ExactNumber parse(std::string_view text);

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && c_ == 1; }

  std::int64_t num() const;  // rational only
  std::int64_t den() const;  // rational only

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t d() const { return d_; }
  std::int64_t c() const { return c_; }

  std::string str() const;

  friend ExactNumber operator+(const ExactNumber& x, const ExactNumber& y);
  friend ExactNumber operator-(const ExactNumber& x, const ExactNumber& y);
  friend ExactNumber operator*(std::int64_t n, const ExactNumber& x);
  friend bool operator==(const ExactNumber& x, const ExactNumber& y);
  friend std::strong_ordering operator<=>(const ExactNumber& x,
                                          const ExactNumber& y);

 private:
  // Value (a + b*sqrt(d)) / c; rationals have b == 0, d == 1.
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t d_ = 1;
  std::int64_t c_ = 1;

  void normalize();
};

/// Greatest integer <= x. For surds the radical part is bracketed by an
/// exact integer square root; no floating point is involved.
std::int64_t exact_floor(const ExactNumber& x);

/// floor((n+1)*alpha + beta) - floor(n*alpha + beta). Total in alpha and
/// beta; lands in {floor(alpha), floor(alpha)+1} when alpha is not an
/// integer and equals alpha otherwise.
std::int64_t lower_mechanical_letter(const ExactNumber& alpha,
                                     const ExactNumber& beta, std::int64_t n);

/// The infinite word of lower_mechanical_letter values. Its alphabet is the
/// at most two attained values, named by their decimal renderings.
InfiniteWord lower_mechanical_word(const ExactNumber& alpha,
                                   const ExactNumber& beta);

/// Periodicity scan for a rational slope p/q: searches periods up to q over
/// a window of at least 4q. The letter sequence is q-periodic, so this
/// always reports PurelyPeriodic with a period dividing q.
PeriodicityReport rational_periodicity_check(const ExactNumber& alpha,
                                             const ExactNumber& beta,
                                             std::size_t window);

/// Periodicity scan for an irrational (surd) slope: reports NoPeriodFound
/// for every period up to max_period within the window. Evidence at desk
/// scale, not a proof.
PeriodicityReport aperiodicity_evidence(const ExactNumber& alpha,
                                        const ExactNumber& beta,
                                        std::size_t max_period,
                                        std::size_t window);

}  // namespace morphoword
