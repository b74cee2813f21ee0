#include "morphoword/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace morphoword {

namespace {

using u128 = unsigned __int128;

constexpr u128 kU128Cap = ~u128(0) >> 1;

std::string powers_notation(const std::string& base, std::size_t k) {
  return "f^" + std::to_string(k) + "(" + base + ")";
}

}  // namespace

std::string CounterexampleReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["morphism"] = morphism;
  j["axiom"] = axiom;
  j["symbolic"] = symbolic;
  j["oracle"] = oracle;
  j["witness"] = witness;
  return j.dump(2);
}

void fail_verification(const CounterexampleReport& report) {
  throw verification_error("oracle disagrees with the " + report.check +
                               " implementation (conclusive verdict)",
                           report.to_json());
}

WordSet brute_force_factors(const Morphism& f, const Word& axiom,
                            std::size_t depth, std::size_t maxlen,
                            EnumLimits limits) {
  if (!f.is_endomorphism()) {
    throw error("brute_force_factors requires an endomorphism");
  }
  WordSet out;
  std::size_t cells = 0;
  Word iterate = axiom;
  for (std::size_t k = 0;; ++k) {
    cells += iterate.size();
    if (cells > limits.max_cells) {
      throw limit_exceeded_error(
          "brute_force_factors exceeded its cell cap at depth " +
          std::to_string(k));
    }
    for (const Word& w : factors_upto(iterate, maxlen)) out.insert(w);
    if (k == depth) break;
    iterate = f.apply(iterate);
  }
  return out;
}

StabilizedFactors brute_force_factors_stabilized(const Morphism& f,
                                                 const Word& axiom,
                                                 std::size_t maxlen,
                                                 std::size_t max_depth,
                                                 EnumLimits limits) {
  if (!f.is_endomorphism()) {
    throw error("brute_force_factors requires an endomorphism");
  }
  StabilizedFactors out;
  std::size_t cells = 0;
  std::size_t unchanged = 0;
  Word iterate = axiom;
  for (std::size_t k = 0;; ++k) {
    cells += iterate.size();
    if (cells > limits.max_cells) {
      throw limit_exceeded_error(
          "brute_force_factors exceeded its cell cap at depth " +
          std::to_string(k));
    }
    const std::size_t before = out.words.size();
    for (const Word& w : factors_upto(iterate, maxlen)) out.words.insert(w);
    unchanged = out.words.size() == before ? unchanged + 1 : 0;
    out.depth = k;
    if (k > 0 && unchanged >= 2) {
      out.stabilized = true;
      return out;
    }
    if (k == max_depth) return out;
    iterate = f.apply(iterate);
  }
}

TriState brute_force_bounded(const Morphism& f, Letter a, std::size_t iters,
                             std::size_t len_cap) {
  if (!f.is_endomorphism()) {
    throw error("brute_force_bounded requires an endomorphism");
  }
  if (iters < 1 || len_cap < 1) {
    throw error("brute_force_bounded requires iters, lenCap >= 1");
  }
  const std::size_t n = f.source()->size();
  const Matrix m = incidence_matrix(f);

  // Immortality certified by direct counting: a letter is mortal exactly
  // when its image count vector vanishes after n steps.
  std::vector<bool> immortal(n, false);
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<u128> v(n, 0);
    v[g] = 1;
    for (std::size_t step = 0; step < n; ++step) {
      std::vector<u128> next(n, 0);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          if (v[c] != 0 && m.at(r, c) != 0) {
            next[r] += v[c] * static_cast<u128>(m.at(r, c));
          }
        }
      }
      v = std::move(next);
    }
    for (u128 x : v) {
      if (x != 0) immortal[g] = true;
    }
  }

  // Occurrence-count vectors of the iterates; exact while within range.
  std::vector<std::vector<u128>> counts;
  {
    std::vector<u128> v(n, 0);
    v[static_cast<std::size_t>(a)] = 1;
    counts.push_back(v);
  }
  bool counts_exact = true;

  std::unordered_map<std::string, std::size_t> seen;
  Word iterate(f.source(), {a});
  bool materialize = true;
  seen.emplace(iterate.str(), 0);

  for (std::size_t k = 1; k <= iters; ++k) {
    if (counts_exact) {
      const std::vector<u128>& prev = counts.back();
      std::vector<u128> next(n, 0);
      for (std::size_t r = 0; r < n && counts_exact; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          if (prev[c] == 0 || m.at(r, c) == 0) continue;
          const u128 add = prev[c] * static_cast<u128>(m.at(r, c));
          if (add / prev[c] != static_cast<u128>(m.at(r, c)) ||
              next[r] > kU128Cap - add) {
            counts_exact = false;
            break;
          }
          next[r] += add;
        }
      }
      if (counts_exact) counts.push_back(std::move(next));
    }
    if (materialize) {
      iterate = f.apply(iterate);
      if (iterate.size() > len_cap * 4 + 64) {
        materialize = false;  // too long to keep for cycle detection
      } else {
        auto [it, inserted] = seen.emplace(iterate.str(), k);
        if (!inserted) {
          TriState out;
          out.verdict = TriState::Verdict::True;
          out.witness = powers_notation("a", it->second) + " = " +
                        powers_notation("a", k) + " = " + iterate.str() +
                        "; the iterates cycle, so finitely many values occur";
          return out;
        }
      }
    }
  }

  // Pumping certificate: dominated count vectors with strictly more of an
  // immortal letter force length growth of at least 1 every k-j steps.
  u128 max_len = 0;
  for (const auto& v : counts) {
    u128 len = 0;
    for (u128 x : v) len += x;
    max_len = std::max(max_len, len);
  }
  if (!counts_exact || max_len > static_cast<u128>(len_cap)) {
    for (std::size_t j = 0; j + 1 < counts.size(); ++j) {
      for (std::size_t k = j + 1; k < counts.size(); ++k) {
        bool dominated = true;
        std::size_t extra_immortal = n;
        for (std::size_t g = 0; g < n; ++g) {
          if (counts[k][g] < counts[j][g]) {
            dominated = false;
            break;
          }
          if (counts[k][g] > counts[j][g] && immortal[g] &&
              extra_immortal == n) {
            extra_immortal = g;
          }
        }
        if (dominated && extra_immortal != n) {
          TriState out;
          out.verdict = TriState::Verdict::False;
          out.witness =
              "counts(" + powers_notation("a", j) + ") <= counts(" +
              powers_notation("a", k) + ") with strictly more of immortal '" +
              f.source()->name(static_cast<Letter>(extra_immortal)) +
              "'; lengths grow by at least 1 every " + std::to_string(k - j) +
              " steps, past any cap";
          return out;
        }
      }
    }
  }

  TriState out;
  out.verdict = TriState::Verdict::Inconclusive;
  out.witness = "no cycle and no growth certificate within iters=" +
                std::to_string(iters) + ", lenCap=" + std::to_string(len_cap);
  return out;
}

TriState brute_force_pushy(const Morphism& f, const Word& axiom,
                           std::size_t depth, std::size_t len_target,
                           EnumLimits limits) {
  if (!f.is_endomorphism()) {
    throw error("brute_force_pushy requires an endomorphism");
  }
  if (depth < 1) throw error("brute_force_pushy requires depth >= 1");
  const std::size_t n = f.source()->size();

  // Certify the letter classification before trusting its labels. iters
  // must comfortably exceed lenCap so that linearly growing letters still
  // certify as unbounded.
  const auto classes = classify_letters(f);
  const std::size_t inner_cap = std::max<std::size_t>(32, 2 * len_target);
  const std::size_t inner_iters = 2 * inner_cap + 8;
  std::vector<int> bounded(n, -1);  // -1 unknown, 0 growing, 1 bounded
  for (std::size_t g = 0; g < n; ++g) {
    TriState verdict =
        brute_force_bounded(f, static_cast<Letter>(g), inner_iters, inner_cap);
    if (!verdict.conclusive()) continue;
    if (verdict.value() != is_bounded(classes[g])) {
      CounterexampleReport report;
      report.check = "classify_letters";
      report.morphism = f.str();
      report.axiom = f.source()->name(static_cast<Letter>(g));
      report.symbolic = std::string(to_string(classes[g]));
      report.oracle = verdict.value() ? "bounded" : "unbounded";
      report.witness = verdict.witness;
      fail_verification(report);
    }
    bounded[g] = verdict.value() ? 1 : 0;
  }

  WordSet bounded_factors;
  bounded_factors.insert(Word(f.source(), {}));
  std::size_t unchanged = 0;
  std::size_t cells = 0;
  std::size_t best_len = 0;
  Word iterate = axiom;

  for (std::size_t k = 0; k <= depth; ++k) {
    cells += iterate.size();
    if (cells > limits.max_cells) {
      throw limit_exceeded_error(
          "brute_force_pushy exceeded its cell cap at depth " +
          std::to_string(k));
    }
    for (Letter letter : iterate.letters()) {
      if (bounded[static_cast<std::size_t>(letter)] == -1) {
        TriState out;
        out.verdict = TriState::Verdict::Inconclusive;
        out.witness = "letter '" +
                      f.source()->name(letter) +
                      "' occurs but its boundedness is unresolved at these "
                      "bounds";
        return out;
      }
    }
    const std::size_t before = bounded_factors.size();
    // Maximal runs of bounded letters are bounded words of the language,
    // and so are all their factors.
    std::size_t run_start = 0;
    for (std::size_t i = 0; i <= iterate.size(); ++i) {
      const bool in_run =
          i < iterate.size() && bounded[static_cast<std::size_t>(iterate[i])];
      if (in_run) continue;
      if (i > run_start) {
        const std::size_t run_len = i - run_start;
        if (run_len >= len_target) {
          Word witness_factor = iterate.subword(run_start, len_target);
          TriState out;
          out.verdict = TriState::Verdict::True;
          out.witness = "bounded factor \"" + witness_factor.str() +
                        "\" of length " + std::to_string(len_target) +
                        " inside " + powers_notation(axiom.str(), k);
          return out;
        }
        for (const Word& u :
             factors_upto(iterate.subword(run_start, run_len), len_target)) {
          bounded_factors.insert(u);
          best_len = std::max(best_len, u.size());
        }
      }
      run_start = i + 1;
    }
    unchanged = bounded_factors.size() == before ? unchanged + 1 : 0;
    if (k >= 2 && unchanged >= 2) {
      TriState out;
      out.verdict = TriState::Verdict::False;
      out.witness = "bounded factor set stabilized at depth " +
                    std::to_string(k) + " with " +
                    std::to_string(bounded_factors.size()) +
                    " factors of length at most " + std::to_string(best_len);
      return out;
    }
    if (k < depth) iterate = f.apply(iterate);
  }

  TriState out;
  out.verdict = TriState::Verdict::Inconclusive;
  out.witness = "bounded factors still growing below the target at depth " +
                std::to_string(depth);
  return out;
}

std::int64_t decimal_floor_oracle(const ExactNumber& x, unsigned digits) {
  if (digits < 20) throw error("decimal_floor_oracle requires digits >= 20");
  if (x.is_rational()) {
    mpz_class num(static_cast<long>(x.num())), den(static_cast<long>(x.den()));
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return static_cast<std::int64_t>(q.get_si());
  }
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits);
  const mpz_class a(static_cast<long>(x.a())), b(static_cast<long>(x.b())),
      d(static_cast<long>(x.d())), c(static_cast<long>(x.c()));
  // s <= sqrt(d)*10^digits < s + 1
  mpz_class s;
  {
    mpz_class radicand = d * pow10 * pow10;
    mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
  }
  const mpz_class base = a * pow10 + b * s;
  const mpz_class lo = b < 0 ? mpz_class(base + b) : base;
  const mpz_class hi = b > 0 ? mpz_class(base + b) : base;
  const mpz_class scale = c * pow10;
  mpz_class qlo, qhi;
  mpz_fdiv_q(qlo.get_mpz_t(), lo.get_mpz_t(), scale.get_mpz_t());
  mpz_fdiv_q(qhi.get_mpz_t(), hi.get_mpz_t(), scale.get_mpz_t());
  if (qlo != qhi) {
    throw error("decimal_floor_oracle: value within ~10^-" +
                std::to_string(digits > 6 ? digits - 6 : digits) +
                " of an integer at " + std::to_string(digits) +
                " digits; retry with more digits");
  }
  if (!qlo.fits_slong_p()) {
    throw overflow_error("decimal_floor_oracle result out of range");
  }
  return static_cast<std::int64_t>(qlo.get_si());
}

}  // namespace morphoword
