#include "morphoword/languages.hpp"

#include <deque>
#include <sstream>

#include "morphoword/errors.hpp"

namespace morphoword {

namespace {

class CellBudget {
 public:
  explicit CellBudget(std::size_t cap) : left_(cap) {}

  void charge(std::size_t cells) {
    if (cells > left_) {
      throw limit_exceeded_error(
          "language enumeration exceeded its cell cap; raise max_cells "
          "(or MORPHOWORD_MAX_CELLS) to enumerate further");
    }
    left_ -= cells;
  }

 private:
  std::size_t left_;
};

void insert_factors(const Word& w, std::size_t n, WordSet& out,
                    std::deque<Word>* worklist) {
  out.insert(Word(w.alphabet(), {}));
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t maxlen = std::min(n, w.size() - i);
    for (std::size_t len = 1; len <= maxlen; ++len) {
      auto [it, inserted] = out.insert(w.subword(i, len));
      if (inserted && worklist) worklist->push_back(*it);
    }
  }
}

}  // namespace

bool is_factorial(const WordSet& S) {
  for (const Word& w : S) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t len = 1; len <= w.size() - i; ++len) {
        if (!S.count(w.subword(i, len))) return false;
      }
    }
    if (!S.count(Word(w.alphabet(), {}))) return false;
  }
  return true;
}

WordSet factor_closure(const WordSet& S) {
  WordSet out;
  for (const Word& w : S) {
    insert_factors(w, w.size(), out, nullptr);
  }
  return out;
}

LanguageSample purely_morphic_language_upto(const Morphism& f,
                                            const Word& axiom, std::size_t n,
                                            EnumLimits limits) {
  if (!f.is_endomorphism()) {
    throw error("purely morphic languages require an endomorphism");
  }
  if (!same_alphabet(axiom.alphabet(), f.source())) {
    throw alphabet_mismatch_error("axiom is not over the morphism's alphabet");
  }
  CellBudget budget(limits.max_cells);

  LanguageSample sample;
  sample.length_bound = n;

  if (!f.is_erasing()) {
    std::deque<Word> worklist;
    budget.charge(axiom.size());
    insert_factors(axiom, n, sample.words, &worklist);
    while (!worklist.empty()) {
      Word v = std::move(worklist.front());
      worklist.pop_front();
      Word fv = f.apply(v);
      budget.charge(fv.size());
      insert_factors(fv, n, sample.words, &worklist);
    }
    sample.complete = true;
    return sample;
  }

  const std::size_t depth = limits.depth_or_default(f.source()->size());
  Word iterate = axiom;
  for (std::size_t k = 0;; ++k) {
    budget.charge(iterate.size());
    insert_factors(iterate, n, sample.words, nullptr);
    if (k == depth) break;
    iterate = f.apply(iterate);
  }
  sample.complete = false;
  sample.fallback_depth = depth;
  return sample;
}

LanguageSample morphic_language_upto(const Morphism& f, const Morphism& h,
                                     const Word& axiom, std::size_t n,
                                     EnumLimits limits) {
  if (!f.is_endomorphism()) {
    throw error("morphic languages require an inner endomorphism");
  }
  if (!same_alphabet(h.source(), f.source())) {
    throw alphabet_mismatch_error(
        "outer morphism's source differs from the inner alphabet");
  }
  if (!same_alphabet(axiom.alphabet(), f.source())) {
    throw alphabet_mismatch_error("axiom is not over the morphism's alphabet");
  }
  CellBudget budget(limits.max_cells);

  LanguageSample sample;
  sample.length_bound = n;

  if (!f.is_erasing() && !h.is_erasing()) {
    // A length-<= n factor of h(v) lies in the h-image of a length-<= n
    // factor of v, so mapping the complete inner window suffices.
    LanguageSample inner = purely_morphic_language_upto(f, axiom, n, limits);
    for (const Word& v : inner.words) {
      Word hv = h.apply(v);
      budget.charge(hv.size());
      insert_factors(hv, n, sample.words, nullptr);
    }
    sample.complete = true;
    return sample;
  }

  const std::size_t depth = limits.depth_or_default(f.source()->size());
  Word iterate = axiom;
  for (std::size_t k = 0;; ++k) {
    Word img = h.apply(iterate);
    budget.charge(img.size() + iterate.size());
    insert_factors(img, n, sample.words, nullptr);
    if (k == depth) break;
    iterate = f.apply(iterate);
  }
  sample.complete = false;
  sample.fallback_depth = depth;
  return sample;
}

bool is_bounded_word(const Morphism& f, const Word& w) {
  if (!same_alphabet(w.alphabet(), f.source())) {
    throw alphabet_mismatch_error("word is not over the morphism's alphabet");
  }
  const auto classes = classify_letters(f);
  for (Letter a : w.letters()) {
    if (!is_bounded(classes[static_cast<std::size_t>(a)])) return false;
  }
  return true;
}

namespace {

// Functional graph on growing letters: each maps to its leftmost (or
// rightmost) growing occurrence in its image, the edge carrying the fully
// bounded block cut off on that side.
struct ExtremalGraph {
  std::vector<Letter> next;         // -1 for non-growing letters
  std::vector<bool> label_pumps;    // label contains an immortal bounded letter
};

ExtremalGraph build_extremal_graph(const Morphism& f,
                                   const std::vector<LetterClass>& classes,
                                   bool leftmost) {
  const std::size_t n = f.source()->size();
  ExtremalGraph g{std::vector<Letter>(n, -1), std::vector<bool>(n, false)};
  for (std::size_t a = 0; a < n; ++a) {
    if (classes[a] != LetterClass::Growing) continue;
    const Word& img = f.image(static_cast<Letter>(a));
    // A growing letter's image contains a growing letter.
    std::size_t pos = img.size();
    if (leftmost) {
      for (std::size_t i = 0; i < img.size(); ++i) {
        if (classes[static_cast<std::size_t>(img[i])] ==
            LetterClass::Growing) {
          pos = i;
          break;
        }
      }
    } else {
      for (std::size_t i = img.size(); i-- > 0;) {
        if (classes[static_cast<std::size_t>(img[i])] ==
            LetterClass::Growing) {
          pos = i;
          break;
        }
      }
    }
    if (pos == img.size()) {
      throw error("internal: growing letter with no growing occurrence");
    }
    g.next[a] = img[pos];
    const std::size_t lo = leftmost ? 0 : pos + 1;
    const std::size_t hi = leftmost ? pos : img.size();
    for (std::size_t i = lo; i < hi; ++i) {
      if (classes[static_cast<std::size_t>(img[i])] ==
          LetterClass::BoundedImmortal) {
        g.label_pumps[a] = true;
        break;
      }
    }
  }
  return g;
}

// Walks into the cycle of `start` and reports whether any cycle edge label
// pumps bounded material.
bool cycle_pumps(const ExtremalGraph& g, Letter start) {
  Letter x = start;
  for (std::size_t i = 0; i < g.next.size(); ++i) {
    x = g.next[static_cast<std::size_t>(x)];
  }
  Letter y = x;
  do {
    if (g.label_pumps[static_cast<std::size_t>(y)]) return true;
    y = g.next[static_cast<std::size_t>(y)];
  } while (y != x);
  return false;
}

}  // namespace

bool is_pushy(const Morphism& f, const Word& axiom) {
  if (!f.is_endomorphism()) {
    throw error("is_pushy requires an endomorphism");
  }
  if (!same_alphabet(axiom.alphabet(), f.source())) {
    throw alphabet_mismatch_error("axiom is not over the morphism's alphabet");
  }
  const std::size_t n = f.source()->size();
  const auto classes = classify_letters(f);

  // Letters occurring anywhere in the language: reachability in the
  // occurrence graph from the letters of the axiom. This is exact even for
  // erasing morphisms, since b occurring in f^k(axiom) puts every letter of
  // f(b) into f^(k+1)(axiom).
  std::vector<bool> occurs(n, false);
  std::deque<Letter> queue;
  for (Letter a : axiom.letters()) {
    if (!occurs[static_cast<std::size_t>(a)]) {
      occurs[static_cast<std::size_t>(a)] = true;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    Letter a = queue.front();
    queue.pop_front();
    for (Letter b : f.image(a).letters()) {
      if (!occurs[static_cast<std::size_t>(b)]) {
        occurs[static_cast<std::size_t>(b)] = true;
        queue.push_back(b);
      }
    }
  }

  const ExtremalGraph left = build_extremal_graph(f, classes, true);
  const ExtremalGraph right = build_extremal_graph(f, classes, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (!occurs[a] || classes[a] != LetterClass::Growing) continue;
    if (cycle_pumps(left, static_cast<Letter>(a)) ||
        cycle_pumps(right, static_cast<Letter>(a))) {
      return true;
    }
  }
  return false;
}

std::pair<bool, bool> pushy_power_check(const Morphism& f, const Word& axiom,
                                        long long p) {
  if (p < 0) throw error("pushy_power_check requires p >= 0");
  const bool base = is_pushy(f, axiom);
  const bool powered = is_pushy(power(f, p + 1), axiom);
  if (base != powered) {
    std::ostringstream report;
    report << "{\n"
           << "  \"check\": \"pushy_power\",\n"
           << "  \"morphism\": \"";
    for (char c : f.str()) report << (c == '\n' ? ';' : c);
    report << "\",\n"
           << "  \"axiom\": \"" << axiom.str() << "\",\n"
           << "  \"power\": " << (p + 1) << ",\n"
           << "  \"pushy\": " << (base ? "true" : "false") << ",\n"
           << "  \"pushy_power\": " << (powered ? "true" : "false") << "\n"
           << "}";
    throw verification_error(
        "pushy verdict changed under a non-trivial power; this indicates "
        "an implementation bug",
        report.str());
  }
  return {base, powered};
}

}  // namespace morphoword
