#include "morphoword/core_words.hpp"

#include <algorithm>

namespace morphoword {

namespace {

bool valid_letter_name(const std::string& name) {
  if (name.empty() || name == "eps") return false;
  if (name.find("->") != std::string::npos) return false;
  for (char c : name) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ';' ||
        c == '#' || c == ',') {
      return false;
    }
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw parse_error("alphabet must be non-empty");
  ids_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (!valid_letter_name(n)) {
      throw parse_error("invalid letter name: '" + n + "'");
    }
    if (!ids_.emplace(n, static_cast<Letter>(i)).second) {
      throw parse_error("duplicate letter name: '" + n + "'");
    }
    if (n.size() != 1) all_single_char_ = false;
  }
}

AlphabetPtr Alphabet::make(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

const std::string& Alphabet::name(Letter id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= names_.size()) {
    throw error("letter id out of range: " + std::to_string(id));
  }
  return names_[static_cast<std::size_t>(id)];
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::require(std::string_view name) const {
  auto id = find(name);
  if (!id) throw parse_error("unknown letter: '" + std::string(name) + "'");
  return *id;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return a != nullptr;
  if (!a || !b) return false;
  return *a == *b;
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw error("word requires an alphabet");
  const auto n = static_cast<Letter>(alphabet_->size());
  for (Letter id : letters_) {
    if (id < 0 || id >= n) {
      throw error("letter id out of range for alphabet: " +
                  std::to_string(id));
    }
  }
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  if (!alphabet) throw error("word requires an alphabet");
  // Trim surrounding whitespace.
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty() || text == "eps") return Word(alphabet, {});

  std::vector<Letter> ids;
  if (text.find(' ') == std::string_view::npos &&
      text.find('\t') == std::string_view::npos) {
    // No separators: try a whole-token name first, then per-character.
    if (auto id = alphabet->find(text)) {
      return Word(alphabet, {*id});
    }
    for (char c : text) {
      auto id = alphabet->find(std::string_view(&c, 1));
      if (!id) {
        throw parse_error("cannot read '" + std::string(text) +
                          "' as a word over the alphabet");
      }
      ids.push_back(*id);
    }
    return Word(std::move(alphabet), std::move(ids));
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
    ids.push_back(alphabet->require(text.substr(pos, end - pos)));
    pos = end;
  }
  return Word(std::move(alphabet), std::move(ids));
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw error("subword out of range");
  }
  return Word(alphabet_,
              std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

std::string Word::str() const {
  if (letters_.empty()) return "eps";
  std::string out;
  const bool compact = alphabet_->all_single_char();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += alphabet_->name(letters_[i]);
  }
  return out;
}

bool operator==(const Word& a, const Word& b) {
  return same_alphabet(a.alphabet_, b.alphabet_) && a.letters_ == b.letters_;
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                      b.letters().begin(), b.letters().end());
}

std::size_t WordHash::operator()(const Word& w) const {
  // FNV-1a over the letter ids.
  std::size_t h = 1469598103934665603ull;
  for (Letter id : w.letters()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(id));
    h *= 1099511628211ull;
  }
  return h;
}

Word concat(const Word& u, const Word& v) {
  if (!same_alphabet(u.alphabet(), v.alphabet())) {
    throw alphabet_mismatch_error("concat: words over different alphabets");
  }
  std::vector<Letter> ids(u.letters().begin(), u.letters().end());
  ids.insert(ids.end(), v.letters().begin(), v.letters().end());
  return Word(u.alphabet(), std::move(ids));
}

bool is_prefix(const Word& p, const Word& w) {
  if (!same_alphabet(p.alphabet(), w.alphabet())) {
    throw alphabet_mismatch_error("is_prefix: words over different alphabets");
  }
  if (p.size() > w.size()) return false;
  return std::equal(p.letters().begin(), p.letters().end(),
                    w.letters().begin());
}

bool is_factor(const Word& f, const Word& w) {
  if (!same_alphabet(f.alphabet(), w.alphabet())) {
    throw alphabet_mismatch_error("is_factor: words over different alphabets");
  }
  if (f.empty()) return true;
  auto it = std::search(w.letters().begin(), w.letters().end(),
                        f.letters().begin(), f.letters().end());
  return it != w.letters().end();
}

WordSet factors_upto(const Word& w, std::size_t n) {
  WordSet out;
  out.insert(Word(w.alphabet(), {}));
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t maxlen = std::min(n, w.size() - i);
    for (std::size_t len = 1; len <= maxlen; ++len) {
      out.insert(w.subword(i, len));
    }
  }
  return out;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw error("primitive_root is undefined on the empty word");
  const std::size_t n = w.size();
  // Border array (KMP prefix function); smallest period = n - border(n).
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t b = border[i - 1];
    while (b > 0 && w[i] != w[b]) b = border[b - 1];
    if (w[i] == w[b]) ++b;
    border[i] = b;
  }
  const std::size_t period = n - border[n - 1];
  if (n % period == 0) {
    return PrimitiveRoot{w.subword(0, period), n / period};
  }
  return PrimitiveRoot{w, 1};
}

std::vector<Word> conjugates(const Word& w) {
  if (w.empty()) throw error("conjugates are undefined on the empty word");
  std::vector<Word> out;
  out.reserve(w.size());
  std::vector<Letter> rot(w.letters().begin(), w.letters().end());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.emplace_back(w.alphabet(), rot);
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  return out;
}

std::vector<Word> sorted_words(const WordSet& words) {
  std::vector<Word> out(words.begin(), words.end());
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

}  // namespace morphoword
