// Morphisms between word monoids: application, composition, powers,
// incidence matrices, and the mortal/bounded/growing letter classification.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "morphoword/core_words.hpp"

namespace morphoword {

/// Growth class of a single letter under iteration of an endomorphism.
/// Mortal letters are eventually erased; BoundedImmortal letters have
/// finitely many distinct iterated images but are never fully erased;
/// Growing letters have image lengths tending to infinity. The three
/// classes partition the alphabet.
enum class LetterClass { Mortal, BoundedImmortal, Growing };

std::string_view to_string(LetterClass c);

/// True for Mortal and BoundedImmortal: the letters whose iterated image
/// set is finite.
inline bool is_bounded(LetterClass c) { return c != LetterClass::Growing; }

/// A total map letter -> word, applied pointwise-concatenatively to words.
class Morphism {
 public:
  /// One image word over `target` per letter of `source`.
  Morphism(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images);

  static Morphism identity(AlphabetPtr alphabet);

  /// Parses the rule syntax: one rule per line (or `;`-separated),
  /// `name -> token token ...`, empty right-hand side written `eps`,
  /// `#` starting a comment. The alphabet is the set of all names
  /// appearing, in first-appearance order; letters that never occur on a
  /// left-hand side get identity images.
  static Morphism parse(std::string_view text);

  const AlphabetPtr& source() const { return source_; }
  const AlphabetPtr& target() const { return target_; }
  bool is_endomorphism() const { return same_alphabet(source_, target_); }
  /// True when some letter image is the empty word.
  bool is_erasing() const { return erasing_; }
  std::size_t max_image_length() const { return max_image_length_; }

  const Word& image(Letter a) const;
  Word apply(const Word& w) const;

  /// Rule listing in the parse() syntax, one rule per line.
  std::string str() const;

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<Word> images_;
  bool erasing_ = false;
  std::size_t max_image_length_ = 0;
};

/// apply(compose(f, g), w) == apply(f, apply(g, w)); requires
/// g.target == f.source.
Morphism compose(const Morphism& f, const Morphism& g);

/// k-fold composition of an endomorphism with itself; power(f, 0) is the
/// identity. k must be non-negative.
Morphism power(const Morphism& f, long long k);

/// Non-negative integer matrix, row-major.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> v;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0) {}

  std::int64_t& at(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const {
    return v[r * cols + c];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
};

/// M[b][a] = number of occurrences of letter b in f(a). Column sums are
/// the image lengths, and incidence_matrix(compose(f, g)) =
/// multiply(incidence_matrix(f), incidence_matrix(g)).
Matrix incidence_matrix(const Morphism& f);

/// Overflow-checked integer matrix product.
Matrix multiply(const Matrix& a, const Matrix& b);

Matrix matrix_power(const Matrix& m, unsigned long long k);

/// Occurrence counts of each letter of w's alphabet in w.
std::vector<std::int64_t> letter_counts(const Word& w);

/// Letter classification of an endomorphism. Mortal letters are the least
/// fixed point of "every letter of f(a) is mortal". A letter grows iff, in
/// the occurrence graph restricted to immortal letters, it reaches a vertex
/// that lies on a cycle and has total outgoing multiplicity at least 2.
std::vector<LetterClass> classify_letters(const Morphism& f);

/// True iff f(a) = a.s with s non-empty and a is a growing letter; then
/// the iterates f^k(a) form strictly lengthening prefixes of a unique
/// infinite fixed point starting with a.
bool is_prolongable(const Morphism& f, Letter a);

}  // namespace morphoword
