// morphoword: generation and analysis of morphic and mechanical words.
//
// Subcommands: gen, complexity, classify, pushy, language, period.
// Exit codes: 0 ok, 1 usage, 2 math-level error (non-prolongable letter,
// exhausted scan budget, size caps), 3 verification mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "morphoword/core_words.hpp"
#include "morphoword/languages.hpp"
#include "morphoword/morphisms.hpp"
#include "morphoword/oracle.hpp"
#include "morphoword/streams.hpp"
#include "morphoword/sturmian.hpp"

namespace mw = morphoword;
using nlohmann::ordered_json;

namespace {

mw::EnumLimits limits_from_env() {
  mw::EnumLimits limits;
  if (const char* cap = std::getenv("MORPHOWORD_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || v == 0) {
      throw mw::parse_error("MORPHOWORD_MAX_CELLS must be a positive integer");
    }
    limits.max_cells = static_cast<std::size_t>(v);
  }
  return limits;
}

mw::Morphism load_morphism(const std::string& spec) {
  if (spec.find("->") != std::string::npos) return mw::Morphism::parse(spec);
  std::ifstream in(spec);
  if (!in) throw mw::parse_error("cannot open morphism file: " + spec);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return mw::Morphism::parse(buffer.str());
}

// Builds a word over the alphabet of its own letters, in first-appearance
// order; accepts space-separated names or compact single-character form.
mw::Word inline_word(const std::string& text) {
  std::vector<std::string> tokens;
  if (text.find(' ') != std::string::npos ||
      text.find('\t') != std::string::npos) {
    std::istringstream in(text);
    for (std::string tok; in >> tok;) tokens.push_back(tok);
  } else {
    for (char c : text) tokens.emplace_back(1, c);
  }
  if (tokens.empty()) throw mw::parse_error("empty word");
  std::vector<std::string> names;
  for (const std::string& t : tokens) {
    if (std::find(names.begin(), names.end(), t) == names.end()) {
      names.push_back(t);
    }
  }
  mw::AlphabetPtr alphabet = mw::Alphabet::make(names);
  std::vector<mw::Letter> ids;
  ids.reserve(tokens.size());
  for (const std::string& t : tokens) ids.push_back(alphabet->require(t));
  return mw::Word(std::move(alphabet), std::move(ids));
}

struct StreamSource {
  std::string morphism;
  std::string fix;
  std::string cycle;
  std::string alpha;
  std::string beta = "0";

  void add_options(CLI::App* cmd) {
    cmd->add_option("--morphism", morphism,
                    "morphism rules: a file path or inline 'a->a b; b->b'");
    cmd->add_option("--fix", fix, "letter whose fixed point to generate");
    cmd->add_option("--cycle", cycle, "repetend of a purely periodic word");
    cmd->add_option("--alpha", alpha,
                    "slope, e.g. 2/5 or (3-1*sqrt(5))/2");
    cmd->add_option("--beta", beta, "intercept (default 0)");
  }

  bool mechanical() const { return !alpha.empty(); }

  mw::InfiniteWord make() const {
    const int picked = (!morphism.empty() || !fix.empty() ? 1 : 0) +
                       (!cycle.empty() ? 1 : 0) + (!alpha.empty() ? 1 : 0);
    if (picked != 1) {
      throw mw::parse_error(
          "pick exactly one source: --morphism/--fix, --cycle, or --alpha");
    }
    if (!cycle.empty()) return mw::InfiniteWord::cycle(inline_word(cycle));
    if (!alpha.empty()) {
      return mw::lower_mechanical_word(mw::ExactNumber::parse(alpha),
                                       mw::ExactNumber::parse(beta));
    }
    if (morphism.empty() || fix.empty()) {
      throw mw::parse_error("--morphism and --fix are both required");
    }
    mw::Morphism f = load_morphism(morphism);
    const mw::Letter a = f.source()->require(fix);
    return mw::InfiniteWord::fixed_point(std::move(f), a);
  }
};

void print_prefix_dump(const mw::Word& prefix, std::ostream& out) {
  if (prefix.alphabet()->all_single_char()) {
    out << (prefix.empty() ? "" : prefix.str()) << '\n';
    return;
  }
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    out << prefix.alphabet()->name(prefix[i]) << '\n';
  }
}

int run_gen(const StreamSource& source, std::size_t length,
            const std::string& format) {
  const mw::Word prefix = source.make().take(length);
  if (format == "text") {
    print_prefix_dump(prefix, std::cout);
  } else if (format == "csv") {
    std::cout << "index,letter\n";
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      std::cout << i << ',' << prefix.alphabet()->name(prefix[i]) << '\n';
    }
  } else {
    ordered_json j;
    j["letters"] = ordered_json::array();
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      j["letters"].push_back(prefix.alphabet()->name(prefix[i]));
    }
    std::cout << j.dump(2) << '\n';
  }
  return 0;
}

int run_complexity(const StreamSource& source, std::size_t max_n,
                   std::size_t window, const std::string& format) {
  const mw::InfiniteWord uu = source.make();
  const mw::EnumLimits limits = limits_from_env();
  struct Row {
    std::size_t n;
    std::size_t count;
    bool exact;
  };
  std::vector<Row> rows;
  for (std::size_t n = 0; n <= max_n; ++n) {
    const mw::FactorCount fc =
        mw::factor_complexity(uu, n, std::max(window, n), limits);
    rows.push_back({n, fc.count, fc.exact});
  }
  if (format == "json") {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const Row& r : rows) {
      j["rows"].push_back(
          {{"n", r.n}, {"p", r.count}, {"complete", r.exact}});
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n,p_n,complete\n";
    for (const Row& r : rows) {
      std::cout << r.n << ',' << r.count << ',' << (r.exact ? "true" : "false")
                << '\n';
    }
  }
  return 0;
}

int run_classify(const std::string& morphism, bool verify,
                 const std::string& format) {
  const mw::Morphism f = load_morphism(morphism);
  const auto classes = mw::classify_letters(f);
  const auto& alphabet = *f.source();

  if (format == "csv") {
    std::cout << "letter,class\n";
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      std::cout << alphabet.name(static_cast<mw::Letter>(a)) << ','
                << mw::to_string(classes[a]) << '\n';
    }
  } else if (format == "json") {
    ordered_json j;
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      j[alphabet.name(static_cast<mw::Letter>(a))] =
          std::string(mw::to_string(classes[a]));
    }
    std::cout << j.dump(2) << '\n';
  } else {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      std::cout << alphabet.name(static_cast<mw::Letter>(a)) << ": "
                << mw::to_string(classes[a]) << '\n';
    }
  }

  if (verify) {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      const mw::TriState verdict =
          mw::brute_force_bounded(f, static_cast<mw::Letter>(a), 128, 48);
      if (!verdict.conclusive()) {
        std::cerr << "note: oracle inconclusive for letter '"
                  << alphabet.name(static_cast<mw::Letter>(a)) << "'\n";
        continue;
      }
      if (verdict.value() != mw::is_bounded(classes[a])) {
        mw::CounterexampleReport report;
        report.check = "classify_letters";
        report.morphism = f.str();
        report.axiom = alphabet.name(static_cast<mw::Letter>(a));
        report.symbolic = std::string(mw::to_string(classes[a]));
        report.oracle = verdict.value() ? "bounded" : "unbounded";
        report.witness = verdict.witness;
        mw::fail_verification(report);
      }
    }
  }
  return 0;
}

int run_pushy(const std::string& morphism, const std::string& axiom_text,
              long long power, bool verify, std::size_t oracle_depth,
              const std::string& format) {
  const mw::Morphism f = load_morphism(morphism);
  const mw::Word axiom = mw::Word::parse(f.source(), axiom_text);

  ordered_json j;
  bool base;
  if (power >= 0) {
    const auto [b, powered] = mw::pushy_power_check(f, axiom, power);
    base = b;
    j["pushy"] = base;
    j["power"] = power + 1;
    j["pushy_power"] = powered;
  } else {
    base = mw::is_pushy(f, axiom);
    j["pushy"] = base;
  }

  std::string oracle_note;
  if (verify) {
    const std::size_t target = std::max<std::size_t>(8, 2 * axiom.size() + 4);
    const mw::TriState verdict = mw::brute_force_pushy(
        f, axiom, oracle_depth, target, limits_from_env());
    if (verdict.conclusive()) {
      if (verdict.value() != base) {
        mw::CounterexampleReport report;
        report.check = "is_pushy";
        report.morphism = f.str();
        report.axiom = axiom.str();
        report.symbolic = base ? "pushy" : "not pushy";
        report.oracle = verdict.value() ? "pushy" : "not pushy";
        report.witness = verdict.witness;
        mw::fail_verification(report);
      }
      oracle_note = verdict.value() ? "true" : "false";
    } else {
      oracle_note = "inconclusive";
    }
    j["oracle"] = oracle_note;
  }

  if (format == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [key, value] : j.items()) {
      std::cout << key << ',' << (value.is_boolean() ? (value.get<bool>() ? "true" : "false")
                                  : value.is_number() ? std::to_string(value.get<long long>())
                                                      : value.get<std::string>())
                << '\n';
    }
  } else {
    std::cout << "pushy=" << (base ? "true" : "false") << '\n';
    if (power >= 0) {
      std::cout << "pushy(f^" << (power + 1)
                << ")=" << (j["pushy_power"].get<bool>() ? "true" : "false")
                << '\n';
    }
    if (verify) std::cout << "oracle=" << oracle_note << '\n';
  }
  return 0;
}

int run_language(const std::string& morphism, const std::string& outer,
                 const std::string& axiom_text, std::size_t max_len,
                 std::size_t depth, bool verify, std::size_t oracle_depth,
                 const std::string& format) {
  const mw::Morphism f = load_morphism(morphism);
  const mw::Word axiom = mw::Word::parse(f.source(), axiom_text);
  mw::EnumLimits limits = limits_from_env();
  limits.depth = depth;

  mw::LanguageSample sample;
  if (outer.empty()) {
    sample = mw::purely_morphic_language_upto(f, axiom, max_len, limits);
  } else {
    sample = mw::morphic_language_upto(f, load_morphism(outer), axiom, max_len,
                                       limits);
  }
  const std::vector<mw::Word> words = mw::sorted_words(sample.words);

  if (format == "json") {
    ordered_json j;
    j["complete"] = sample.complete;
    if (sample.fallback_depth) j["depth"] = *sample.fallback_depth;
    j["words"] = ordered_json::array();
    for (const mw::Word& w : words) j["words"].push_back(w.str());
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "word,length,complete\n";
    for (const mw::Word& w : words) {
      std::cout << w.str() << ',' << w.size() << ','
                << (sample.complete ? "true" : "false") << '\n';
    }
  } else {
    std::cout << "complete=" << (sample.complete ? "true" : "false");
    if (sample.fallback_depth) std::cout << " depth=" << *sample.fallback_depth;
    std::cout << '\n';
    for (const mw::Word& w : words) std::cout << w.str() << '\n';
  }

  if (verify) {
    if (!outer.empty()) {
      throw mw::parse_error("--verify is only supported without --outer");
    }
    const mw::StabilizedFactors oracle = mw::brute_force_factors_stabilized(
        f, axiom, max_len, oracle_depth, limits);
    if (!oracle.stabilized) {
      std::cerr << "note: language oracle did not stabilize within depth "
                << oracle_depth << '\n';
    } else if (sample.complete && oracle.words != sample.words) {
      mw::CounterexampleReport report;
      report.check = "purely_morphic_language_upto";
      report.morphism = f.str();
      report.axiom = axiom.str();
      report.symbolic = std::to_string(sample.words.size()) + " words";
      report.oracle = std::to_string(oracle.words.size()) +
                      " words (stabilized at depth " +
                      std::to_string(oracle.depth) + ")";
      mw::fail_verification(report);
    }
  }
  return 0;
}

int run_period(const StreamSource& source, std::size_t max_period,
               std::size_t window, const std::string& format) {
  mw::PeriodicityReport report;
  if (source.mechanical()) {
    const mw::ExactNumber alpha = mw::ExactNumber::parse(source.alpha);
    const mw::ExactNumber beta = mw::ExactNumber::parse(source.beta);
    if (alpha.is_rational()) {
      report = mw::rational_periodicity_check(alpha, beta, window);
    } else {
      report = mw::aperiodicity_evidence(alpha, beta, max_period, window);
    }
  } else {
    report = mw::detect_periodicity(source.make(), max_period, window);
  }

  if (format == "json") {
    ordered_json j;
    switch (report.status) {
      case mw::PeriodicityReport::Status::PurelyPeriodic:
        j["status"] = "purely_periodic";
        break;
      case mw::PeriodicityReport::Status::EventuallyPeriodic:
        j["status"] = "eventually_periodic";
        break;
      case mw::PeriodicityReport::Status::NoPeriodFound:
        j["status"] = "no_period_found";
        break;
    }
    j["preperiod"] = report.preperiod;
    j["period"] = report.period;
    j["max_period_searched"] = report.max_period_searched;
    j["window_searched"] = report.window_searched;
    std::cout << j.dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << "status,preperiod,period,max_period_searched,window_searched\n";
    const char* status =
        report.status == mw::PeriodicityReport::Status::PurelyPeriodic
            ? "purely_periodic"
            : report.status == mw::PeriodicityReport::Status::EventuallyPeriodic
                  ? "eventually_periodic"
                  : "no_period_found";
    std::cout << status << ',' << report.preperiod << ',' << report.period
              << ',' << report.max_period_searched << ','
              << report.window_searched << '\n';
  } else {
    std::cout << report.str() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics-on-words toolkit: morphic and mechanical words"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  auto* gen = app.add_subcommand("gen", "print a prefix of an infinite word");
  StreamSource gen_source;
  gen_source.add_options(gen);
  std::size_t gen_length = 64;
  gen->add_option("--length", gen_length, "number of letters")
      ->capture_default_str();

  auto* complexity =
      app.add_subcommand("complexity", "factor complexity table");
  StreamSource cx_source;
  cx_source.add_options(complexity);
  std::size_t cx_max_n = 8, cx_window = 1024;
  complexity->add_option("--max-n", cx_max_n, "largest factor length")
      ->capture_default_str();
  complexity->add_option("--window", cx_window, "prefix window scanned")
      ->capture_default_str();

  auto* classify =
      app.add_subcommand("classify", "mortal/bounded/growing letter table");
  std::string cl_morphism;
  bool cl_verify = false;
  classify->add_option("--morphism", cl_morphism, "morphism rules or file")
      ->required();
  classify->add_flag("--verify", cl_verify, "cross-check with the oracle");

  auto* pushy = app.add_subcommand(
      "pushy", "does the language contain arbitrarily long bounded words?");
  std::string pu_morphism, pu_axiom;
  long long pu_power = -1;
  bool pu_verify = false;
  std::size_t pu_oracle_depth = 32;
  pushy->add_option("--morphism", pu_morphism, "morphism rules or file")
      ->required();
  pushy->add_option("--axiom", pu_axiom, "axiom word")->required();
  pushy->add_option("--power", pu_power,
                    "also check the power f^(p+1) and compare");
  pushy->add_flag("--verify", pu_verify, "cross-check with the oracle");
  pushy->add_option("--oracle-depth", pu_oracle_depth, "oracle unroll depth")
      ->capture_default_str();

  auto* language =
      app.add_subcommand("language", "window of a (purely) morphic language");
  std::string la_morphism, la_outer, la_axiom;
  std::size_t la_max_len = 6, la_depth = 0, la_oracle_depth = 24;
  bool la_verify = false;
  language->add_option("--morphism", la_morphism, "inner endomorphism")
      ->required();
  language->add_option("--outer", la_outer, "outer morphism (morphic image)");
  language->add_option("--axiom", la_axiom, "axiom word")->required();
  language->add_option("--max-len", la_max_len, "window length bound")
      ->capture_default_str();
  language->add_option("--depth", la_depth,
                       "fallback unroll depth for erasing morphisms");
  language->add_flag("--verify", la_verify, "cross-check with the oracle");
  language->add_option("--oracle-depth", la_oracle_depth, "oracle unroll depth")
      ->capture_default_str();

  auto* period = app.add_subcommand("period", "periodicity report");
  StreamSource pe_source;
  pe_source.add_options(period);
  std::size_t pe_max_period = 64, pe_window = 0;
  period->add_option("--max-period", pe_max_period, "largest period searched")
      ->capture_default_str();
  period->add_option("--window", pe_window,
                     "prefix window (default 2*max-period or larger)");

  try {
    app.parse(argc, argv);

    if (gen->parsed()) return run_gen(gen_source, gen_length, format);
    if (complexity->parsed()) {
      return run_complexity(cx_source, cx_max_n, cx_window, format);
    }
    if (classify->parsed()) return run_classify(cl_morphism, cl_verify, format);
    if (pushy->parsed()) {
      return run_pushy(pu_morphism, pu_axiom, pu_power, pu_verify,
                       pu_oracle_depth, format);
    }
    if (language->parsed()) {
      return run_language(la_morphism, la_outer, la_axiom, la_max_len,
                          la_depth, la_verify, la_oracle_depth, format);
    }
    if (period->parsed()) {
      const std::size_t window =
          pe_window == 0 ? std::max<std::size_t>(512, 2 * pe_max_period)
                         : pe_window;
      return run_period(pe_source, pe_max_period, window, format);
    }
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const mw::verification_error& e) {
    std::cerr << "verification mismatch: " << e.what() << '\n'
              << e.report() << '\n';
    return 3;
  } catch (const mw::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
