#include "pvalid/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pvalid/counting.hpp"
#include "pvalid/errors.hpp"
#include "pvalid/families.hpp"
#include "pvalid/insertion.hpp"
#include "pvalid/survey.hpp"
#include "pvalid/verify.hpp"

namespace pvalid {

namespace {

using nlohmann::json;

enum class Format { Plain, Json, Csv };

/// Reported with exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct CliConfig {
  Format format = Format::Plain;
  std::string word;
  std::optional<std::uint32_t> m;
  std::size_t n = 0;
  std::uint64_t k = 0;
  std::size_t l = 0;
  std::optional<std::size_t> limit;
  std::optional<std::string> base;
  int workers = 0;
  bool force = false;
  std::optional<std::uint64_t> budget;
  std::optional<std::string> checkpoint;
  std::optional<std::uint64_t> chunk_words;
  std::optional<std::uint64_t> max_chunks;
  bool no_prune = false;
  std::string suite = "all";
};

Word read_word(const CliConfig& cfg) {
  if (cfg.m) return parse_any_word(cfg.word, *cfg.m);
  const bool numeric = !cfg.word.empty() && (cfg.word.front() == '+' || cfg.word.front() == '-' ||
                                             std::isdigit(static_cast<unsigned char>(cfg.word.front())));
  return parse_any_word(cfg.word, numeric ? std::numeric_limits<std::uint32_t>::max() : 26);
}

std::uint32_t alphabet_size(const CliConfig& cfg, const Word& w) {
  return cfg.m ? *cfg.m : std::max<std::uint32_t>(1, w.min_alphabet_size());
}

std::uint32_t read_base(const std::string& text, std::uint32_t m) {
  std::uint32_t base = 0;
  if (text.size() == 1 && text[0] >= 'A' && text[0] <= 'Z') {
    base = static_cast<std::uint32_t>(text[0] - 'A');
  } else {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(text, &used);
      if (used != text.size() || v == 0) throw std::invalid_argument(text);
      base = static_cast<std::uint32_t>(v - 1);
    } catch (const std::exception&) {
      throw UsageError("--base expects an uppercase letter or a 1-based base number, got '" + text + "'");
    }
  }
  if (base >= m) throw UsageError("--base " + text + " is outside the alphabet of size " + std::to_string(m));
  return base;
}

std::string base_name(std::uint32_t base) {
  return base < 26 ? std::string(1, static_cast<char>('A' + base)) : std::to_string(base + 1);
}

SurveyOptions survey_options(const CliConfig& cfg) {
  SurveyOptions opts;
  opts.workers = cfg.workers;
  opts.force = cfg.force;
  opts.prune = !cfg.no_prune;
  if (cfg.budget) opts.budget = *cfg.budget;
  if (cfg.chunk_words) opts.chunk_words = *cfg.chunk_words;
  if (cfg.checkpoint) opts.checkpoint = *cfg.checkpoint;
  opts.max_new_chunks = cfg.max_chunks;
  return opts;
}

void require_not_csv(const CliConfig& cfg, const std::string& command) {
  if (cfg.format == Format::Csv) throw UsageError("--format csv is only available for survey, not " + command);
}

json histogram_json(const CountHistogram& h) {
  json hist = json::object();
  for (const auto& [k, c] : h.counts) hist[std::to_string(k)] = std::to_string(c);
  json realizable = json::array();
  for (auto k : h.realizable()) realizable.push_back(std::to_string(k));
  return json{{"n", h.n},
              {"m", h.m},
              {"histogram", std::move(hist)},
              {"zero", std::to_string(h.zero_count)},
              {"total", std::to_string(h.scanned)},
              {"evaluated", std::to_string(h.evaluated)},
              {"realizable", std::move(realizable)},
              {"complete", h.complete}};
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return json{{"suite", r.suite}, {"passed", r.passed()}, {"verdict", r.verdict}, {"checks", std::move(checks)}};
}

int cmd_count(const CliConfig& cfg, std::ostream& out) {
  require_not_csv(cfg, "count");
  const Word w = read_word(cfg);
  const ValidCount c = count_valid(w);
  if (cfg.format == Format::Json) {
    out << json{{"command", "count"},
                {"word", format_any_word(w)},
                {"m", alphabet_size(cfg, w)},
                {"length", w.size()},
                {"balanced", is_balanced(w)},
                {"count", c.str()}}
               .dump()
        << '\n';
  } else {
    out << c.str() << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const CliConfig& cfg, std::ostream& out) {
  require_not_csv(cfg, "enumerate");
  const Word w = read_word(cfg);
  const auto result = enumerate_valid(w, cfg.limit);
  const ValidCount total = count_valid(w);
  if (cfg.format == Format::Json) {
    json matchings = json::array();
    json trees = json::array();
    for (const auto& m : result.matchings) {
      matchings.push_back(to_string(m));
      trees.push_back(to_string(tree_from_matching(m)));
    }
    out << json{{"command", "enumerate"},
                {"word", format_any_word(w)},
                {"count", total.str()},
                {"truncated", result.truncated},
                {"matchings", std::move(matchings)},
                {"trees", std::move(trees)}}
               .dump()
        << '\n';
  } else {
    out << "count " << total.str() << (result.truncated ? " (listing truncated)" : "") << '\n';
    std::size_t width = 0;
    for (const auto& m : result.matchings) width = std::max(width, to_string(m).size());
    for (const auto& m : result.matchings) {
      out << std::left << std::setw(static_cast<int>(width)) << to_string(m) << "  "
          << to_string(tree_from_matching(m)) << '\n';
    }
  }
  return kExitOk;
}

int cmd_family(const CliConfig& cfg, std::ostream& out) {
  require_not_csv(cfg, "family");
  if (cfg.k == 0 || cfg.l == 0) throw UsageError("family requires --k and --l of at least 1");
  const FamilyParams params(static_cast<std::size_t>(cfg.k), cfg.l);
  const Word w = family_word(params);
  const ValidCount dp = count_valid(w);
  const ValidCount closed = family_count_closed_form(params);
  if (cfg.format == Format::Json) {
    out << json{{"command", "family"},
                {"k", params.k()},
                {"l", params.l()},
                {"word", format_word(w)},
                {"count", dp.str()},
                {"closed_form", closed.str()},
                {"agree", dp == closed}}
               .dump()
        << '\n';
  } else {
    out << "word         " << format_word(w) << '\n'
        << "count        " << dp.str() << '\n'
        << "closed form  " << closed.str() << '\n';
  }
  return kExitOk;
}

int cmd_insert(const CliConfig& cfg, std::ostream& out) {
  require_not_csv(cfg, "insert");
  const Word w = read_word(cfg);
  const std::uint32_t m = alphabet_size(cfg, w);
  const std::uint32_t base = cfg.base ? read_base(*cfg.base, m) : default_base(w);
  const auto result = insert_forced_pair(w, base);
  const Word plain_first = insert_pair_plain_first(w, base);
  const ValidCount before = count_valid(w);
  const ValidCount after = count_valid(result.word);
  const ValidCount plain_first_count = count_valid(plain_first);
  if (cfg.format == Format::Json) {
    out << json{{"command", "insert"},
                {"word", format_any_word(w)},
                {"base", base_name(base)},
                {"result", format_any_word(result.word)},
                {"position", result.position},
                {"station", result.station ? json(*result.station) : json(nullptr)},
                {"count", before.str()},
                {"result_count", after.str()},
                {"plain_first", format_any_word(plain_first)},
                {"plain_first_count", plain_first_count.str()}}
               .dump()
        << '\n';
  } else {
    out << "word               " << format_any_word(w) << '\n'
        << "base               " << base_name(base) << '\n'
        << "inserted before    " << result.position
        << (result.station ? " (station " + std::to_string(*result.station) + ")" : " (base absent)") << '\n'
        << "result             " << format_any_word(result.word) << '\n'
        << "count              " << before.str() << " -> " << after.str() << '\n'
        << "plain-first order  " << format_any_word(plain_first) << " (count " << plain_first_count.str()
        << ")\n";
  }
  return kExitOk;
}

int cmd_survey(const CliConfig& cfg, std::ostream& out) {
  if (!cfg.m) throw UsageError("survey requires --m");
  const SurveyParams params(cfg.n, *cfg.m);
  const auto h = survey(params, survey_options(cfg));
  switch (cfg.format) {
    case Format::Json: {
      json j = histogram_json(h);
      j["command"] = "survey";
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "k,N\n";
      for (const auto& [k, c] : h.counts) out << k << ',' << c << '\n';
      break;
    case Format::Plain: {
      out << "n=" << h.n << " m=" << h.m << (h.complete ? "" : " (incomplete)") << '\n';
      out << std::setw(12) << "k" << "  " << "N(n,m,k)" << '\n';
      for (const auto& [k, c] : h.counts) out << std::setw(12) << k << "  " << c << '\n';
      out << "zero-count words  " << h.zero_count << '\n' << "total words       " << h.scanned << '\n';
      out << "realizable        ";
      bool first = true;
      for (auto k : h.realizable()) {
        out << (first ? "" : " ") << k;
        first = false;
      }
      out << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_witnesses(const CliConfig& cfg, std::ostream& out) {
  require_not_csv(cfg, "witnesses");
  if (!cfg.m) throw UsageError("witnesses requires --m");
  const SurveyParams params(cfg.n, *cfg.m);
  const auto words = find_witnesses(params, cfg.k, cfg.limit.value_or(10), survey_options(cfg));
  if (cfg.format == Format::Json) {
    json list = json::array();
    for (const auto& w : words) list.push_back(format_any_word(w));
    out << json{{"command", "witnesses"},
                {"n", params.n()},
                {"m", params.m()},
                {"k", std::to_string(cfg.k)},
                {"words", std::move(list)}}
               .dump()
        << '\n';
  } else {
    for (const auto& w : words) out << format_any_word(w) << '\n';
    if (words.empty()) out << "no word of this size has count " << cfg.k << '\n';
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  require_not_csv(cfg, "verify");
  const SurveyOptions opts = survey_options(cfg);
  std::vector<Report> reports;
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "family") reports.push_back(verify_family_suite());
  if (all || cfg.suite == "counterexample") reports.push_back(verify_counterexample(opts));
  if (all || cfg.suite == "monotone") reports.push_back(verify_monotone_suite(5, 1, opts));
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
  if (cfg.format == Format::Json) {
    json list = json::array();
    for (const auto& r : reports) list.push_back(report_json(r));
    out << json{{"command", "verify"}, {"suite", cfg.suite}, {"passed", passed}, {"reports", std::move(list)}}
               .dump()
        << '\n';
  } else {
    for (const auto& r : reports) {
      out << "== " << r.suite << '\n';
      for (const auto& c : r.checks) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
      }
      if (!r.verdict.empty()) out << "   " << r.verdict << '\n';
    }
    out << (passed ? "all checks passed" : "verification FAILED") << '\n';
  }
  return passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact counts of valid noncrossing matchings over complementary alphabets", "pvalid"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Format> formats{{"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", cfg.format, "Output format: plain, json or csv (survey only)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  if (const char* env = std::getenv("PVALID_WORKERS")) {
    try {
      cfg.workers = std::stoi(env);
    } catch (const std::exception&) {
      err << "ignoring PVALID_WORKERS=" << env << '\n';
    }
  }

  auto add_m = [&](CLI::App* sub, const char* help) {
    return sub->add_option("--m", cfg.m, help)->check(CLI::PositiveNumber);
  };
  auto add_survey_flags = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "Worker threads (default: PVALID_WORKERS or all cores)")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--force", cfg.force, "Run even when the word space exceeds the budget");
    sub->add_option("--budget", cfg.budget, "Largest word space run without --force")->check(CLI::PositiveNumber);
    sub->add_option("--chunk-words", cfg.chunk_words, "Words per work unit and journal record")
        ->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "Number of valid matchings of WORD");
  count->add_option("word", cfg.word, "Word, compact (BbaA) or numeric (+2,-2,-1,+1)")->required();
  add_m(count, "Alphabet size (default: inferred from the word)");

  auto* enumerate = app.add_subcommand("enumerate", "List the valid matchings of WORD");
  enumerate->add_option("word", cfg.word, "Word")->required();
  enumerate->add_option("--limit", cfg.limit, "Stop after this many matchings");
  add_m(enumerate, "Alphabet size (default: inferred from the word)");

  auto* family = app.add_subcommand("family", "Word A^k a^k A^l a^l with its count and closed form");
  family->add_option("--k", cfg.k, "First block size")->required()->check(CLI::PositiveNumber);
  family->add_option("--l", cfg.l, "Second block size")->required()->check(CLI::PositiveNumber);

  auto* insert = app.add_subcommand("insert", "Count-preserving insertion of a complementary pair");
  insert->add_option("word", cfg.word, "Word")->required();
  insert->add_option("--base", cfg.base, "Base to insert, as a letter (A) or 1-based number");
  add_m(insert, "Alphabet size (default: inferred from the word)");

  auto* survey_cmd = app.add_subcommand("survey", "Histogram of counts over every word of length 2n");
  survey_cmd->add_option("--n", cfg.n, "Half length")->required()->check(CLI::PositiveNumber);
  add_m(survey_cmd, "Alphabet size")->required();
  add_survey_flags(survey_cmd);
  survey_cmd->add_option("--checkpoint", cfg.checkpoint, "Resumable NDJSON journal path");
  auto* max_chunks = survey_cmd->add_option("--max-chunks", cfg.max_chunks, "Process at most this many new chunks");
  max_chunks->needs("--checkpoint");
  survey_cmd->add_flag("--no-prune", cfg.no_prune, "Evaluate every word instead of one per orbit");

  auto* witnesses = app.add_subcommand("witnesses", "Words of length 2n with exactly k valid matchings");
  witnesses->add_option("--n", cfg.n, "Half length")->required()->check(CLI::PositiveNumber);
  add_m(witnesses, "Alphabet size")->required();
  witnesses->add_option("--k", cfg.k, "Target count")->required();
  witnesses->add_option("--limit", cfg.limit, "Maximum number of words (default 10)");
  add_survey_flags(witnesses);

  auto* verify = app.add_subcommand("verify", "Run a reproduction suite");
  verify->add_option("--suite", cfg.suite, "counterexample, family, monotone or all")
      ->check(CLI::IsMember({"counterexample", "family", "monotone", "all"}));
  add_survey_flags(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*count) return cmd_count(cfg, out);
    if (*enumerate) return cmd_enumerate(cfg, out);
    if (*family) return cmd_family(cfg, out);
    if (*insert) return cmd_insert(cfg, out);
    if (*survey_cmd) return cmd_survey(cfg, out);
    if (*witnesses) return cmd_witnesses(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
  } catch (const ParseError& e) {
    err << "error: malformed word at " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pvalid
