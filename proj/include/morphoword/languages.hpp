// Factorial languages, factor closure, purely morphic and morphic language
// enumeration, bounded words and pushy detection.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "morphoword/core_words.hpp"
#include "morphoword/morphisms.hpp"

namespace morphoword {

/// A finite, length-windowed sample of a language. When `complete` is true
/// the sample provably contains every language element of length at most
/// `length_bound`; otherwise it is a lower approximation, and
/// `fallback_depth` records the iteration depth that produced it.
struct LanguageSample {
  WordSet words;
  std::size_t length_bound = 0;
  bool complete = false;
  std::optional<std::size_t> fallback_depth;
};

/// Size limits for language enumerations. `depth` is the unrolling depth of
/// the fallback used for erasing morphisms (0 selects max(8, 2|alphabet|));
/// `max_cells` caps the total number of letters processed.
struct EnumLimits {
  std::size_t depth = 0;
  std::size_t max_cells = 8'000'000;

  std::size_t depth_or_default(std::size_t alphabet_size) const {
    if (depth != 0) return depth;
    return std::max<std::size_t>(8, 2 * alphabet_size);
  }
};

/// True iff every factor of every member of S is itself a member.
bool is_factorial(const WordSet& S);

/// Least factorial superset of S: the union of all factors of members.
WordSet factor_closure(const WordSet& S);

/// All elements of length <= n of the least language containing the axiom
/// and closed under f-images and factors. For non-erasing f the sample is
/// complete: it is the least fixed point of
///   S -> S + factors<=n(axiom) + union over v in S of factors<=n(f(v)),
/// which saturates because a short factor of f(w) lies inside the image of
/// a short factor of w whenever letter images are non-empty. For erasing f
/// that argument fails and the sample falls back to the factor closure of
/// the iterates f^k(axiom), k <= depth, marked incomplete.
LanguageSample purely_morphic_language_upto(const Morphism& f,
                                            const Word& axiom, std::size_t n,
                                            EnumLimits limits = {});

/// Length-<= n window of the factor closure of the h-image of the purely
/// morphic language of (f, axiom). Complete when both f and h are
/// non-erasing; otherwise an incomplete bounded-depth unrolling.
LanguageSample morphic_language_upto(const Morphism& f, const Morphism& h,
                                     const Word& axiom, std::size_t n,
                                     EnumLimits limits = {});

/// True iff every letter of w is Mortal or BoundedImmortal, i.e. the purely
/// morphic language induced by w is finite.
bool is_bounded_word(const Morphism& f, const Word& w);

/// True iff the purely morphic language of (f, axiom) contains arbitrarily
/// long bounded words. Decided on the growing letters reachable from the
/// axiom: the leftmost/rightmost-growing-occurrence functional graphs pump
/// a bounded block forever exactly when a cycle edge label contains an
/// immortal bounded letter.
bool is_pushy(const Morphism& f, const Word& axiom);

/// Evaluates is_pushy for f and for f^(p+1). The two verdicts are provably
/// equal over a finite alphabet; a mismatch indicates an implementation bug
/// and throws verification_error carrying a counterexample report.
std::pair<bool, bool> pushy_power_check(const Morphism& f, const Word& axiom,
                                        long long p);

}  // namespace morphoword
