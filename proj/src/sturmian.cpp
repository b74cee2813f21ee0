#include "morphoword/sturmian.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace morphoword {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw overflow_error("exact arithmetic overflow (addition)");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw overflow_error("exact arithmetic overflow (multiplication)");
  }
  return r;
}

i128 checked_mul_i128(i128 a, i128 b) {
  if (a == 0 || b == 0) return 0;
  i128 r = a * b;
  if (r / a != b) {
    throw overflow_error("exact arithmetic overflow (wide multiplication)");
  }
  return r;
}

// Floored division with positive divisor.
std::int64_t fdiv(std::int64_t a, std::int64_t c) {
  std::int64_t q = a / c;
  if (a % c != 0 && a < 0) --q;
  return q;
}

u128 isqrt_u128(u128 x) {
  if (x == 0) return 0;
  int bits = 0;
  for (u128 t = x; t != 0; t >>= 1) ++bits;
  u128 r = u128(1) << ((bits + 1) / 2);
  for (;;) {
    u128 next = (r + x / r) >> 1;
    if (next >= r) break;
    r = next;
  }
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Sign of a + b*sqrt(d) for square-free d >= 2 and b != 0; never zero.
int surd_sign(std::int64_t a, std::int64_t b, std::int64_t d) {
  if (a >= 0 && b > 0) return 1;
  if (a <= 0 && b < 0) return -1;
  const i128 a2 = checked_mul_i128(a, a);
  const i128 b2d = checked_mul_i128(checked_mul_i128(b, b), d);
  if (a > 0) return a2 > b2d ? 1 : -1;  // b < 0
  return b2d > a2 ? 1 : -1;             // a < 0, b > 0
}

std::int64_t parse_int(std::string_view text, std::size_t& pos) {
  bool neg = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    neg = text[pos] == '-';
    ++pos;
  }
  const std::size_t start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == start) throw parse_error("expected an integer in number literal");
  std::int64_t value = 0;
  auto res = std::from_chars(text.data() + start, text.data() + pos, value);
  if (res.ec != std::errc{}) {
    throw parse_error("integer out of range in number literal");
  }
  return neg ? -value : value;
}

void expect(std::string_view text, std::size_t& pos, std::string_view token) {
  if (text.substr(pos, token.size()) != token) {
    throw parse_error("malformed number literal: expected '" +
                      std::string(token) + "'");
  }
  pos += token.size();
}

}  // namespace

void ExactNumber::normalize() {
  if (c_ == 0) throw error("denominator must be non-zero");
  if (c_ < 0) {
    if (c_ == INT64_MIN) throw overflow_error("denominator out of range");
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (b_ == 0) {
    d_ = 1;
  } else {
    if (d_ <= 0) throw error("radicand must be positive");
    // Pull square factors out of the radicand.
    for (std::int64_t p = 2; p * p <= d_; ++p) {
      while (d_ % (p * p) == 0) {
        d_ /= p * p;
        b_ = checked_mul(b_, p);
      }
    }
    if (d_ == 1) {
      a_ = checked_add(a_, b_);
      b_ = 0;
    }
  }
  std::int64_t g = std::gcd(std::gcd(std::abs(a_), std::abs(b_)), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

ExactNumber ExactNumber::rational(std::int64_t p, std::int64_t q) {
  ExactNumber x;
  x.a_ = p;
  x.c_ = q;
  x.normalize();
  return x;
}

ExactNumber ExactNumber::surd(std::int64_t a, std::int64_t b, std::int64_t d,
                              std::int64_t c) {
  ExactNumber x;
  x.a_ = a;
  x.b_ = b;
  x.d_ = d;
  x.c_ = c;
  x.normalize();
  return x;
}

ExactNumber ExactNumber::parse(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') cleaned += ch;
  }
  std::string_view s = cleaned;
  if (s.empty()) throw parse_error("empty number literal");

  std::size_t pos = 0;
  if (s[0] == '(') {
    // (a+b*sqrt(d))/c
    ++pos;
    const std::int64_t a = parse_int(s, pos);
    if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) {
      throw parse_error("malformed surd literal: expected '+' or '-'");
    }
    const bool minus = s[pos] == '-';
    ++pos;
    std::int64_t b = parse_int(s, pos);
    if (minus) b = -b;
    expect(s, pos, "*sqrt(");
    const std::int64_t d = parse_int(s, pos);
    expect(s, pos, ")");
    expect(s, pos, ")");
    expect(s, pos, "/");
    const std::int64_t c = parse_int(s, pos);
    if (pos != s.size()) throw parse_error("trailing input in number literal");
    return ExactNumber::surd(a, b, d, c);
  }
  const std::int64_t p = parse_int(s, pos);
  if (pos == s.size()) return ExactNumber::rational(p);
  expect(s, pos, "/");
  const std::int64_t q = parse_int(s, pos);
  if (pos != s.size()) throw parse_error("trailing input in number literal");
  return ExactNumber::rational(p, q);
}

std::int64_t ExactNumber::num() const {
  if (!is_rational()) throw error("num() requires a rational");
  return a_;
}

std::int64_t ExactNumber::den() const {
  if (!is_rational()) throw error("den() requires a rational");
  return c_;
}

std::string ExactNumber::str() const {
  std::ostringstream out;
  if (is_rational()) {
    out << a_;
    if (c_ != 1) out << '/' << c_;
    return out.str();
  }
  out << '(' << a_ << (b_ < 0 ? '-' : '+') << std::abs(b_) << "*sqrt(" << d_
      << "))/" << c_;
  return out.str();
}

ExactNumber operator+(const ExactNumber& x, const ExactNumber& y) {
  if (!x.is_rational() && !y.is_rational() && x.d_ != y.d_) {
    throw error("cannot combine surds with different radicands (" +
                std::to_string(x.d_) + " vs " + std::to_string(y.d_) + ")");
  }
  ExactNumber r;
  r.a_ = checked_add(checked_mul(x.a_, y.c_), checked_mul(y.a_, x.c_));
  r.b_ = checked_add(checked_mul(x.b_, y.c_), checked_mul(y.b_, x.c_));
  r.d_ = x.is_rational() ? y.d_ : x.d_;
  r.c_ = checked_mul(x.c_, y.c_);
  r.normalize();
  return r;
}

ExactNumber operator-(const ExactNumber& x, const ExactNumber& y) {
  return x + (-1 * y);
}

ExactNumber operator*(std::int64_t n, const ExactNumber& x) {
  ExactNumber r;
  r.a_ = checked_mul(n, x.a_);
  r.b_ = checked_mul(n, x.b_);
  r.d_ = x.d_;
  r.c_ = x.c_;
  r.normalize();
  return r;
}

bool operator==(const ExactNumber& x, const ExactNumber& y) {
  // Canonical forms are unique, so field equality decides value equality.
  return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_ && x.c_ == y.c_;
}

std::strong_ordering operator<=>(const ExactNumber& x, const ExactNumber& y) {
  if (x == y) return std::strong_ordering::equal;
  const ExactNumber diff = x - y;
  int sign;
  if (diff.is_rational()) {
    sign = diff.a_ > 0 ? 1 : (diff.a_ < 0 ? -1 : 0);
  } else {
    sign = surd_sign(diff.a_, diff.b_, diff.d_);
  }
  return sign < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::int64_t exact_floor(const ExactNumber& x) {
  if (x.is_rational()) return fdiv(x.a(), x.c());
  // sqrt(d) is irrational, so |b|*sqrt(d) lies strictly between t and t+1
  // for t = isqrt(b*b*d); the numerator interval pins the floor exactly.
  const u128 radicand = u128(checked_mul_i128(
      checked_mul_i128(x.b(), x.b()), x.d()));
  const u128 t = isqrt_u128(radicand);
  if (t > u128(INT64_MAX)) {
    throw overflow_error("surd magnitude exceeds exact range");
  }
  const auto ti = static_cast<std::int64_t>(t);
  if (x.b() > 0) return fdiv(checked_add(x.a(), ti), x.c());
  return fdiv(checked_add(checked_add(x.a(), -ti), -1), x.c());
}

std::int64_t lower_mechanical_letter(const ExactNumber& alpha,
                                     const ExactNumber& beta, std::int64_t n) {
  const std::int64_t hi = exact_floor(checked_add(n, 1) * alpha + beta);
  const std::int64_t lo = exact_floor(n * alpha + beta);
  return checked_add(hi, -lo);
}

InfiniteWord lower_mechanical_word(const ExactNumber& alpha,
                                   const ExactNumber& beta) {
  const std::int64_t base = exact_floor(alpha);
  if (alpha.is_integer()) {
    AlphabetPtr single = Alphabet::make({std::to_string(base)});
    return InfiniteWord::from_function(single,
                                       [](std::size_t) -> Letter { return 0; });
  }
  AlphabetPtr two =
      Alphabet::make({std::to_string(base), std::to_string(base + 1)});
  return InfiniteWord::from_function(
      two, [alpha, beta, base](std::size_t i) -> Letter {
        const std::int64_t v =
            lower_mechanical_letter(alpha, beta, static_cast<std::int64_t>(i));
        if (v != base && v != base + 1) {
          throw error("internal: mechanical letter outside expected range");
        }
        return v == base ? 0 : 1;
      });
}

PeriodicityReport rational_periodicity_check(const ExactNumber& alpha,
                                             const ExactNumber& beta,
                                             std::size_t window) {
  if (!alpha.is_rational()) {
    throw error("rational_periodicity_check requires a rational slope");
  }
  const auto q = static_cast<std::size_t>(alpha.den());
  const std::size_t N = std::max(window, 4 * q);
  return detect_periodicity(lower_mechanical_word(alpha, beta), q, N);
}

PeriodicityReport aperiodicity_evidence(const ExactNumber& alpha,
                                        const ExactNumber& beta,
                                        std::size_t max_period,
                                        std::size_t window) {
  if (alpha.is_rational()) {
    throw error("aperiodicity_evidence requires an irrational (surd) slope");
  }
  return detect_periodicity(lower_mechanical_word(alpha, beta), max_period,
                            window);
}

}  // namespace morphoword
