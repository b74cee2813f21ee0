// Lazy infinite words: prepend, indexing, morphic images, fixed points,
// periodic words, windowed languages, factor complexity, periodicity scans.
#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

#include "morphoword/core_words.hpp"
#include "morphoword/languages.hpp"
#include "morphoword/morphisms.hpp"

namespace morphoword {

/// Default scan budget for morphic images: forcing fails once this many
/// consecutive empty letter images produce no output.
inline constexpr std::size_t kDefaultMorphFuel = 1'000'000;

/// A lazily forced, memoized infinite letter sequence. Copies share the
/// underlying memo. Forcing is serialized per word; already-forced letters
/// never change, so reads are consistent across repeated forcing.
class InfiniteWord {
 public:
  /// at(i) = g(i); g must return valid letter ids of `alphabet`.
  static InfiniteWord from_function(AlphabetPtr alphabet,
                                    std::function<Letter(std::size_t)> g);

  /// The purely periodic word u.u.u...; u must be non-empty.
  static InfiniteWord cycle(Word u);

  /// p followed by tail; prepend of the empty word is tail itself.
  static InfiniteWord prepend(Word p, InfiniteWord tail);

  /// The concatenation f(u0) f(u1) ... with empty images skipped. Forcing
  /// throws fuel_exhausted_error after `fuel` consecutive empty images
  /// yield no letter (the image may then be a finite word).
  static InfiniteWord morph_image(Morphism f, InfiniteWord src,
                                  std::size_t fuel = kDefaultMorphFuel);

  /// The unique infinite word starting with `a` that equals its own
  /// f-image; requires is_prolongable(f, a).
  static InfiniteWord fixed_point(Morphism f, Letter a);

  /// The word with the first n letters removed (iterated tail).
  static InfiniteWord drop(InfiniteWord uu, std::size_t n);

  Letter at(std::size_t i) const;
  Word take(std::size_t n) const;

  const AlphabetPtr& alphabet() const;

 private:
  struct Impl;
  explicit InfiniteWord(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<Impl> impl_;

  friend LanguageSample word_language_upto(const InfiniteWord&, std::size_t,
                                           std::size_t, EnumLimits);
};

/// Exact decision of "p is a prefix of uu" (compares |p| letters).
bool is_prefix_of_stream(const Word& p, const InfiniteWord& uu);

/// One-sided factor test: true means w occurs in uu (within the first N
/// letters); false only means there is no occurrence inside that window.
bool occurs_in_prefix(const Word& w, const InfiniteWord& uu, std::size_t N);

/// factors_upto(take(uu, N), n). The sample is certified complete for
/// cycles once N >= 2|u| + n, and for fixed points of non-erasing morphisms
/// when the window equals the complete purely morphic sample.
LanguageSample word_language_upto(const InfiniteWord& uu, std::size_t n,
                                  std::size_t N, EnumLimits limits = {});

struct FactorCount {
  std::size_t count = 0;
  /// Exact value when true; otherwise a lower bound from a window.
  bool exact = false;
};

/// Number of distinct length-n factors seen in the first N letters.
FactorCount factor_complexity(const InfiniteWord& uu, std::size_t n,
                              std::size_t N, EnumLimits limits = {});

struct PeriodicityReport {
  enum class Status { PurelyPeriodic, EventuallyPeriodic, NoPeriodFound };

  Status status = Status::NoPeriodFound;
  std::size_t preperiod = 0;
  std::size_t period = 0;
  // Bounds searched; a NoPeriodFound is evidence within these, not proof.
  std::size_t max_period_searched = 0;
  std::size_t window_searched = 0;

  std::string str() const;
};

/// Smallest period (then smallest preperiod) with period <= maxPeriod such
/// that take(uu, N) is periodic from the preperiod on, verified up to the
/// end of the window. The periodic tail must span at least two periods and
/// at least half the window, so a repetition that merely touches the window
/// edge does not count. Requires N >= 2*maxPeriod.
PeriodicityReport detect_periodicity(const InfiniteWord& uu,
                                     std::size_t max_period, std::size_t N);

}  // namespace morphoword
