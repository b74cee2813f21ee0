#include "morphoword/streams.hpp"

#include <mutex>
#include <optional>
#include <sstream>
#include <variant>

namespace morphoword {

namespace {

struct FromFunctionGen {
  std::function<Letter(std::size_t)> g;
};

struct CycleGen {
  Word repetend;
};

struct PrependGen {
  Word prefix;
  std::shared_ptr<InfiniteWord> tail;
};

struct MorphImageGen {
  Morphism f;
  std::shared_ptr<InfiniteWord> src;
  std::size_t fuel;
  std::size_t src_pos = 0;
  std::size_t empty_run = 0;
};

struct FixedPointGen {
  Morphism f;
  Word next_chunk;  // f^k(s) where f(a) = a.s; appended, then advanced
};

struct SuffixGen {
  std::shared_ptr<InfiniteWord> src;
  std::size_t offset;
};

using Generator = std::variant<FromFunctionGen, CycleGen, PrependGen,
                               MorphImageGen, FixedPointGen, SuffixGen>;

}  // namespace

struct InfiniteWord::Impl {
  AlphabetPtr alphabet;
  mutable Generator gen;  // forcing state lives inside the generator
  mutable std::mutex mu;
  mutable std::vector<Letter> memo;

  Impl(AlphabetPtr a, Generator g) : alphabet(std::move(a)), gen(std::move(g)) {}

  // Forces letters until memo holds at least n; caller must not hold mu.
  void ensure(std::size_t n) const {
    std::scoped_lock lock(mu);
    while (memo.size() < n) {
      std::visit([&](auto& g) { step(g, n); }, gen);
    }
  }

  void push(Letter id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= alphabet->size()) {
      throw error("stream produced a letter outside its alphabet: " +
                  std::to_string(id));
    }
    memo.push_back(id);
  }

  void step(FromFunctionGen& g, std::size_t) const { push(g.g(memo.size())); }

  void step(CycleGen& g, std::size_t) const {
    memo.push_back(g.repetend[memo.size() % g.repetend.size()]);
  }

  void step(PrependGen& g, std::size_t) const {
    const std::size_t i = memo.size();
    memo.push_back(i < g.prefix.size() ? g.prefix[i]
                                       : g.tail->at(i - g.prefix.size()));
  }

  void step(MorphImageGen& g, std::size_t) const {
    for (;;) {
      const Word& img = g.f.image(g.src->at(g.src_pos++));
      if (img.empty()) {
        if (++g.empty_run >= g.fuel) throw fuel_exhausted_error(g.fuel);
        continue;
      }
      g.empty_run = 0;
      memo.insert(memo.end(), img.letters().begin(), img.letters().end());
      return;
    }
  }

  void step(FixedPointGen& g, std::size_t) const {
    // memo always holds a.s.f(s)...f^(k-1)(s); appending f^k(s) keeps it a
    // prefix of the fixed point, and chunks never shrink to empty for a
    // prolongable first letter.
    memo.insert(memo.end(), g.next_chunk.letters().begin(),
                g.next_chunk.letters().end());
    g.next_chunk = g.f.apply(g.next_chunk);
    if (g.next_chunk.empty()) {
      throw error("internal: fixed-point chunk vanished");
    }
  }

  void step(SuffixGen& g, std::size_t n) const {
    while (memo.size() < n) {
      memo.push_back(g.src->at(g.offset + memo.size()));
    }
  }
};

InfiniteWord InfiniteWord::from_function(
    AlphabetPtr alphabet, std::function<Letter(std::size_t)> g) {
  if (!alphabet) throw error("stream requires an alphabet");
  if (!g) throw error("from_function requires a function");
  return InfiniteWord(
      std::make_shared<Impl>(alphabet, FromFunctionGen{std::move(g)}));
}

InfiniteWord InfiniteWord::cycle(Word u) {
  if (u.empty()) throw error("cycle requires a non-empty repetend");
  AlphabetPtr alphabet = u.alphabet();
  return InfiniteWord(
      std::make_shared<Impl>(std::move(alphabet), CycleGen{std::move(u)}));
}

InfiniteWord InfiniteWord::prepend(Word p, InfiniteWord tail) {
  if (!same_alphabet(p.alphabet(), tail.alphabet())) {
    throw alphabet_mismatch_error("prepend: prefix over a different alphabet");
  }
  if (p.empty()) return tail;
  AlphabetPtr alphabet = tail.alphabet();
  return InfiniteWord(std::make_shared<Impl>(
      std::move(alphabet),
      PrependGen{std::move(p), std::make_shared<InfiniteWord>(std::move(tail))}));
}

InfiniteWord InfiniteWord::morph_image(Morphism f, InfiniteWord src,
                                       std::size_t fuel) {
  if (!same_alphabet(src.alphabet(), f.source())) {
    throw alphabet_mismatch_error(
        "morph_image: stream is not over the morphism's source");
  }
  if (fuel == 0) throw error("morph_image requires a positive fuel budget");
  AlphabetPtr alphabet = f.target();
  return InfiniteWord(std::make_shared<Impl>(
      std::move(alphabet),
      MorphImageGen{std::move(f), std::make_shared<InfiniteWord>(std::move(src)),
                    fuel}));
}

InfiniteWord InfiniteWord::fixed_point(Morphism f, Letter a) {
  if (!is_prolongable(f, a)) {
    throw error("fixed_point requires a prolongable letter: image must start "
                "with the letter, continue non-trivially, and grow");
  }
  const Word& img = f.image(a);
  Word chunk = img.subword(1, img.size() - 1);
  AlphabetPtr alphabet = f.source();
  auto impl = std::make_shared<Impl>(
      alphabet, FixedPointGen{std::move(f), std::move(chunk)});
  impl->memo.push_back(a);
  return InfiniteWord(std::move(impl));
}

InfiniteWord InfiniteWord::drop(InfiniteWord uu, std::size_t n) {
  if (n == 0) return uu;
  AlphabetPtr alphabet = uu.alphabet();
  return InfiniteWord(std::make_shared<Impl>(
      std::move(alphabet),
      SuffixGen{std::make_shared<InfiniteWord>(std::move(uu)), n}));
}

Letter InfiniteWord::at(std::size_t i) const {
  impl_->ensure(i + 1);
  std::scoped_lock lock(impl_->mu);
  return impl_->memo[i];
}

Word InfiniteWord::take(std::size_t n) const {
  impl_->ensure(n);
  std::scoped_lock lock(impl_->mu);
  return Word(impl_->alphabet,
              std::vector<Letter>(impl_->memo.begin(), impl_->memo.begin() + n));
}

const AlphabetPtr& InfiniteWord::alphabet() const { return impl_->alphabet; }

bool is_prefix_of_stream(const Word& p, const InfiniteWord& uu) {
  if (!same_alphabet(p.alphabet(), uu.alphabet())) {
    throw alphabet_mismatch_error("prefix over a different alphabet");
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (uu.at(i) != p[i]) return false;
  }
  return true;
}

bool occurs_in_prefix(const Word& w, const InfiniteWord& uu, std::size_t N) {
  if (N < w.size()) {
    throw error("occurs_in_prefix: window smaller than the word");
  }
  return is_factor(w, uu.take(N));
}

LanguageSample word_language_upto(const InfiniteWord& uu, std::size_t n,
                                  std::size_t N, EnumLimits limits) {
  if (N < n) throw error("word_language_upto requires N >= n");
  LanguageSample sample;
  sample.length_bound = n;
  sample.words = factors_upto(uu.take(N), n);

  if (const auto* cyc = std::get_if<CycleGen>(&uu.impl_->gen)) {
    // Every length-<= n factor of a |u|-periodic word occurs within
    // 2|u| + n letters.
    if (N >= 2 * cyc->repetend.size() + n) sample.complete = true;
    return sample;
  }
  if (const auto* fp = std::get_if<FixedPointGen>(&uu.impl_->gen)) {
    if (!fp->f.is_erasing()) {
      const Letter head = uu.at(0);
      LanguageSample pml = purely_morphic_language_upto(
          fp->f, Word(uu.alphabet(), {head}), n, limits);
      if (pml.complete && pml.words == sample.words) sample.complete = true;
    }
    return sample;
  }
  return sample;
}

FactorCount factor_complexity(const InfiniteWord& uu, std::size_t n,
                              std::size_t N, EnumLimits limits) {
  LanguageSample sample = word_language_upto(uu, n, N, limits);
  FactorCount out;
  out.exact = sample.complete;
  for (const Word& w : sample.words) {
    if (w.size() == n) ++out.count;
  }
  return out;
}

std::string PeriodicityReport::str() const {
  std::ostringstream out;
  switch (status) {
    case Status::PurelyPeriodic:
      out << "PurelyPeriodic(" << period << ")";
      break;
    case Status::EventuallyPeriodic:
      out << "EventuallyPeriodic(" << preperiod << "," << period << ")";
      break;
    case Status::NoPeriodFound:
      out << "NoPeriodFound(maxPeriod=" << max_period_searched
          << ",window=" << window_searched << ")";
      break;
  }
  return out.str();
}

PeriodicityReport detect_periodicity(const InfiniteWord& uu,
                                     std::size_t max_period, std::size_t N) {
  if (max_period == 0) throw error("detect_periodicity requires maxPeriod >= 1");
  if (N < 2 * max_period) {
    throw error("detect_periodicity requires N >= 2*maxPeriod");
  }
  const Word w = uu.take(N);
  PeriodicityReport report;
  report.max_period_searched = max_period;
  report.window_searched = N;
  for (std::size_t p = 1; p <= max_period; ++p) {
    // Least r with w[i] == w[i+p] for all r <= i < N-p; the periodicity
    // must persist to the end of the window.
    std::size_t r = 0;
    for (std::size_t i = N - p; i-- > 0;) {
      if (w[i] != w[i + p]) {
        r = i + 1;
        break;
      }
    }
    // The verified tail must span at least two periods and at least half
    // the window; short window-edge repetitions are not periodicity.
    if (r + 2 * p > N || r > N / 2) continue;
    report.period = p;
    report.preperiod = r;
    report.status = r == 0 ? PeriodicityReport::Status::PurelyPeriodic
                           : PeriodicityReport::Status::EventuallyPeriodic;
    return report;
  }
  report.status = PeriodicityReport::Status::NoPeriodFound;
  return report;
}

}  // namespace morphoword
