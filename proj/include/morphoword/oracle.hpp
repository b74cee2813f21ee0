// Independent brute-force oracles: direct unrolling of morphism iterates,
// pigeonhole boundedness checks, pushy witnesses, and an arbitrary-precision
// decimal floor. Deliberately naive and bounded by explicit caps; used to
// certify the symbolic algorithms.
#pragma once

#include <cstdint>
#include <string>

#include "morphoword/core_words.hpp"
#include "morphoword/languages.hpp"
#include "morphoword/morphisms.hpp"
#include "morphoword/sturmian.hpp"

namespace morphoword {

/// Verdict of a bounded search: conclusive answers carry a replayable
/// witness; inconclusive ones only state the bounds that were searched.
struct TriState {
  enum class Verdict { True, False, Inconclusive };

  Verdict verdict = Verdict::Inconclusive;
  std::string witness;

  bool conclusive() const { return verdict != Verdict::Inconclusive; }
  bool value() const {
    if (!conclusive()) throw error("inconclusive oracle verdict has no value");
    return verdict == Verdict::True;
  }
};

/// Structured record produced when a symbolic result and a conclusive
/// oracle verdict disagree.
struct CounterexampleReport {
  std::string check;
  std::string morphism;
  std::string axiom;
  std::string symbolic;
  std::string oracle;
  std::string witness;

  std::string to_json() const;
};

[[noreturn]] void fail_verification(const CounterexampleReport& report);

/// Union of factors_upto(f^k(axiom), maxlen) for k <= depth; monotone in
/// depth. Throws limit_exceeded_error when the unrolled iterates exceed
/// limits.max_cells letters in total.
WordSet brute_force_factors(const Morphism& f, const Word& axiom,
                            std::size_t depth, std::size_t maxlen,
                            EnumLimits limits = {});

struct StabilizedFactors {
  WordSet words;
  bool stabilized = false;   // set unchanged for three consecutive depths
  std::size_t depth = 0;     // last depth unrolled
};

/// brute_force_factors with early exit once the cumulative factor set is
/// unchanged across three consecutive depths.
StabilizedFactors brute_force_factors_stabilized(const Morphism& f,
                                                 const Word& axiom,
                                                 std::size_t maxlen,
                                                 std::size_t max_depth,
                                                 EnumLimits limits = {});

/// Decides boundedness of a single letter by direct iteration: a repeated
/// iterate f^j(a) = f^k(a) proves boundedness; a pair of occurrence-count
/// vectors with counts(f^j(a)) <= counts(f^k(a)) and strictly more of some
/// immortal letter proves unbounded growth past any cap. Otherwise
/// inconclusive within the given bounds.
TriState brute_force_bounded(const Morphism& f, Letter a, std::size_t iters,
                             std::size_t len_cap);

/// Searches the unrolled language for a fully bounded factor of length at
/// least len_target (pushy witness); reports false when the set of bounded
/// factors stabilizes below the target for three consecutive depths. Letter
/// classes come from classify_letters, which is first certified against
/// brute_force_bounded; a conclusive disagreement throws
/// verification_error.
TriState brute_force_pushy(const Morphism& f, const Word& axiom,
                           std::size_t depth, std::size_t len_target,
                           EnumLimits limits = {});

/// Floor via an arbitrary-precision decimal bracket of the radical part,
/// with rigorous error bounds. Throws (demanding more digits) if the value
/// is too close to an integer for the bracket to separate it. digits >= 20.
std::int64_t decimal_floor_oracle(const ExactNumber& x, unsigned digits);

}  // namespace morphoword
