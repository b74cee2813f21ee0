// Finite words over interned alphabets: concatenation, prefixes, factors,
// periods, primitive roots, conjugates.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "morphoword/errors.hpp"

namespace morphoword {

using Letter = std::int32_t;

/// An ordered finite set of letter names. Names are externally visible
/// strings; internally every letter is a dense id in [0, size()).
class Alphabet {
 public:
  /// Names must be non-empty, distinct, free of whitespace and of the
  /// reserved tokens used by the rule syntax (`eps`, `->`, `;`, `#`).
  explicit Alphabet(std::vector<std::string> names);

  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter id) const;
  std::optional<Letter> find(std::string_view name) const;
  /// Like find(), but throws parse_error for unknown names.
  Letter require(std::string_view name) const;
  bool all_single_char() const { return all_single_char_; }
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Letter> ids_;
  bool all_single_char_ = true;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// True when both pointers designate the same alphabet (by identity or by
/// name-for-name equality).
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// A finite word: a sequence of letter ids over a fixed alphabet.
/// The empty word is valid. Immutable after construction.
class Word {
 public:
  Word() = default;
  Word(AlphabetPtr alphabet, std::vector<Letter> letters);

  /// Parses either whitespace-separated letter names, or (when every
  /// alphabet name is a single character and the text has no spaces) a
  /// compact string of name characters. "eps" denotes the empty word.
  static Word parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const;

  /// Compact rendering when all names are single characters, otherwise
  /// space-separated names; the empty word renders as "eps".
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b);
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

/// Length-major, then id-lexicographic order; deterministic listing order
/// for words over one alphabet.
bool word_less(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

using WordSet = std::unordered_set<Word, WordHash>;

/// u followed by v. Both words must share an alphabet.
Word concat(const Word& u, const Word& v);

bool is_prefix(const Word& p, const Word& w);
bool is_factor(const Word& f, const Word& w);

/// All factors of w of length at most n, including the empty word.
WordSet factors_upto(const Word& w, std::size_t n);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 0;
};

/// Shortest word whose power equals w, with the maximal exponent.
/// Computed from the smallest period of w (border array); w must be
/// non-empty.
PrimitiveRoot primitive_root(const Word& w);

/// The |w| left rotations of w in rotation order, starting with w itself.
/// Duplicates are retained. w must be non-empty.
std::vector<Word> conjugates(const Word& w);

/// Words of one set sorted with word_less; deterministic output order.
std::vector<Word> sorted_words(const WordSet& words);

}  // namespace morphoword
