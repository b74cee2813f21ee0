#include "morphoword/morphisms.hpp"

#include <algorithm>
#include <sstream>

namespace morphoword {

std::string_view to_string(LetterClass c) {
  switch (c) {
    case LetterClass::Mortal:
      return "Mortal";
    case LetterClass::BoundedImmortal:
      return "BoundedImmortal";
    case LetterClass::Growing:
      return "Growing";
  }
  return "?";
}

Morphism::Morphism(AlphabetPtr source, AlphabetPtr target,
                   std::vector<Word> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (!source_ || !target_) throw error("morphism requires alphabets");
  if (images_.size() != source_->size()) {
    throw error("morphism must map every source letter");
  }
  for (const Word& img : images_) {
    if (!same_alphabet(img.alphabet(), target_)) {
      throw alphabet_mismatch_error(
          "morphism image is not over the target alphabet");
    }
    if (img.empty()) erasing_ = true;
    max_image_length_ = std::max(max_image_length_, img.size());
  }
}

Morphism Morphism::identity(AlphabetPtr alphabet) {
  std::vector<Word> images;
  images.reserve(alphabet->size());
  for (std::size_t a = 0; a < alphabet->size(); ++a) {
    images.emplace_back(alphabet, std::vector<Letter>{static_cast<Letter>(a)});
  }
  return Morphism(alphabet, alphabet, std::move(images));
}

Morphism Morphism::parse(std::string_view text) {
  // ';' separates rules exactly like a newline does; '#' comments run to
  // the next separator.
  std::vector<std::pair<std::string, std::vector<std::string>>> rules;
  std::vector<std::string> order;  // names in first-appearance order
  auto note_name = [&order](const std::string& n) {
    if (std::find(order.begin(), order.end(), n) == order.end()) {
      order.push_back(n);
    }
  };

  std::string line;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of(";\n", pos);
    if (end == std::string_view::npos) end = text.size();
    line.assign(text.substr(pos, end - pos));
    pos = end + 1;

    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    // The arrow needs no surrounding whitespace.
    for (std::size_t arrow = line.find("->"); arrow != std::string::npos;
         arrow = line.find("->", arrow + 4)) {
      line.replace(arrow, 2, " -> ");
    }
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() < 3 || tokens[1] != "->") {
      throw parse_error("bad morphism rule: '" + line + "'");
    }
    const std::string& lhs = tokens[0];
    if (lhs == "eps") throw parse_error("'eps' cannot be a letter");
    for (const auto& [name, _] : rules) {
      if (name == lhs) throw parse_error("duplicate rule for '" + lhs + "'");
    }
    std::vector<std::string> rhs(tokens.begin() + 2, tokens.end());
    if (rhs.size() == 1 && rhs[0] == "eps") rhs.clear();
    note_name(lhs);
    for (const std::string& t : rhs) {
      if (t == "eps") {
        throw parse_error("'eps' must be the entire right-hand side");
      }
      note_name(t);
    }
    rules.emplace_back(lhs, std::move(rhs));
    if (end == text.size()) break;
  }
  if (rules.empty()) throw parse_error("no morphism rules found");

  AlphabetPtr alphabet = Alphabet::make(order);
  std::vector<Word> images;
  images.reserve(alphabet->size());
  for (std::size_t a = 0; a < alphabet->size(); ++a) {
    const std::string& name = alphabet->name(static_cast<Letter>(a));
    auto it = std::find_if(rules.begin(), rules.end(),
                           [&](const auto& r) { return r.first == name; });
    if (it == rules.end()) {
      // Letters mentioned only on right-hand sides keep themselves.
      images.emplace_back(alphabet,
                          std::vector<Letter>{static_cast<Letter>(a)});
      continue;
    }
    std::vector<Letter> ids;
    ids.reserve(it->second.size());
    for (const std::string& t : it->second) ids.push_back(alphabet->require(t));
    images.emplace_back(alphabet, std::move(ids));
  }
  return Morphism(alphabet, alphabet, std::move(images));
}

const Word& Morphism::image(Letter a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= images_.size()) {
    throw error("letter outside the source alphabet: " + std::to_string(a));
  }
  return images_[static_cast<std::size_t>(a)];
}

Word Morphism::apply(const Word& w) const {
  if (!same_alphabet(w.alphabet(), source_)) {
    throw alphabet_mismatch_error("apply: word is not over the source");
  }
  std::vector<Letter> out;
  for (Letter a : w.letters()) {
    const Word& img = image(a);
    out.insert(out.end(), img.letters().begin(), img.letters().end());
  }
  return Word(target_, std::move(out));
}

std::string Morphism::str() const {
  std::string out;
  for (std::size_t a = 0; a < source_->size(); ++a) {
    out += source_->name(static_cast<Letter>(a));
    out += " -> ";
    const Word& img = images_[a];
    if (img.empty()) {
      out += "eps";
    } else {
      for (std::size_t i = 0; i < img.size(); ++i) {
        if (i > 0) out += ' ';
        out += target_->name(img[i]);
      }
    }
    out += '\n';
  }
  return out;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!same_alphabet(g.target(), f.source())) {
    throw alphabet_mismatch_error("compose: g.target differs from f.source");
  }
  std::vector<Word> images;
  images.reserve(g.source()->size());
  for (std::size_t a = 0; a < g.source()->size(); ++a) {
    images.push_back(f.apply(g.image(static_cast<Letter>(a))));
  }
  return Morphism(g.source(), f.target(), std::move(images));
}

Morphism power(const Morphism& f, long long k) {
  if (!f.is_endomorphism()) {
    throw error("power requires an endomorphism");
  }
  if (k < 0) throw error("power requires a non-negative exponent");
  Morphism acc = Morphism::identity(f.source());
  for (long long i = 0; i < k; ++i) acc = compose(f, acc);
  return acc;
}

Matrix incidence_matrix(const Morphism& f) {
  Matrix m(f.target()->size(), f.source()->size());
  for (std::size_t a = 0; a < f.source()->size(); ++a) {
    for (Letter b : f.image(static_cast<Letter>(a)).letters()) {
      ++m.at(static_cast<std::size_t>(b), a);
    }
  }
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw error("matrix shape mismatch");
  Matrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        std::int64_t prod = 0, sum = 0;
        if (__builtin_mul_overflow(aik, b.at(k, j), &prod) ||
            __builtin_add_overflow(out.at(i, j), prod, &sum)) {
          throw overflow_error("matrix product exceeds 64-bit range");
        }
        out.at(i, j) = sum;
      }
    }
  }
  return out;
}

Matrix matrix_power(const Matrix& m, unsigned long long k) {
  if (m.rows != m.cols) throw error("matrix_power requires a square matrix");
  Matrix acc(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) acc.at(i, i) = 1;
  for (unsigned long long i = 0; i < k; ++i) acc = multiply(m, acc);
  return acc;
}

std::vector<std::int64_t> letter_counts(const Word& w) {
  std::vector<std::int64_t> counts(w.alphabet()->size(), 0);
  for (Letter a : w.letters()) ++counts[static_cast<std::size_t>(a)];
  return counts;
}

std::vector<LetterClass> classify_letters(const Morphism& f) {
  if (!f.is_endomorphism()) {
    throw error("classify_letters requires an endomorphism");
  }
  const std::size_t n = f.source()->size();

  // Mortal letters: least fixed point of "all image letters are mortal",
  // reached within n rounds.
  std::vector<bool> mortal(n, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (mortal[a]) continue;
      bool all_mortal = true;
      for (Letter b : f.image(static_cast<Letter>(a)).letters()) {
        if (!mortal[static_cast<std::size_t>(b)]) {
          all_mortal = false;
          break;
        }
      }
      if (all_mortal) {
        mortal[a] = true;
        changed = true;
      }
    }
  }

  // Occurrence graph on immortal letters, with multiplicities.
  std::vector<std::vector<std::int64_t>> mult(
      n, std::vector<std::int64_t>(n, 0));
  std::vector<std::int64_t> out_mult(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (mortal[a]) continue;
    for (Letter b : f.image(static_cast<Letter>(a)).letters()) {
      const auto bi = static_cast<std::size_t>(b);
      if (mortal[bi]) continue;
      ++mult[a][bi];
      ++out_mult[a];
    }
  }

  // One-or-more-step reachability among immortal letters.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) reach[a][b] = mult[a][b] > 0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!reach[a][k]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (reach[k][b]) reach[a][b] = true;
      }
    }
  }

  // a grows iff it reaches (in zero or more steps) a vertex on a cycle
  // whose total outgoing multiplicity is at least 2: each cycle return
  // spawns an extra immortal occurrence, and immortal occurrences never
  // die out.
  std::vector<LetterClass> classes(n, LetterClass::BoundedImmortal);
  for (std::size_t a = 0; a < n; ++a) {
    if (mortal[a]) {
      classes[a] = LetterClass::Mortal;
      continue;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (mortal[v] || (v != a && !reach[a][v])) continue;
      if (reach[v][v] && out_mult[v] >= 2) {
        classes[a] = LetterClass::Growing;
        break;
      }
    }
  }
  return classes;
}

bool is_prolongable(const Morphism& f, Letter a) {
  if (!f.is_endomorphism()) {
    throw error("is_prolongable requires an endomorphism");
  }
  const Word& img = f.image(a);
  if (img.size() < 2 || img[0] != a) return false;
  return classify_letters(f)[static_cast<std::size_t>(a)] ==
         LetterClass::Growing;
}

}  // namespace morphoword
