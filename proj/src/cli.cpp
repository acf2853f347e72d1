#include "sigmalab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <ostream>

#include "sigmalab/changepoints.hpp"
#include "sigmalab/serialize.hpp"
#include "sigmalab/sigma.hpp"
#include "sigmalab/verifier.hpp"

namespace sigmalab::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Csv, Text };

struct Options {
  Format format = Format::Json;
  std::optional<unsigned> precision_bits;
  std::optional<unsigned> max_precision_bits;
  std::string cache_path;
  bool no_cache = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts plain integers as well as integral decimal literals such as 1e12.
std::uint64_t parse_count(const std::string& text, const char* what) {
  mpq_class q;
  try {
    q = parse_decimal(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  if (q.get_den() != 1 || q < 1 || !q.get_num().fits_ulong_p()) {
    throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  return q.get_num().get_ui();
}

PrecisionPolicy make_policy(const Options& opt) {
  PrecisionPolicy p;
  if (const char* env = std::getenv("SIGMA_LAB_MAX_BITS"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used != std::string_view(env).size()) throw std::invalid_argument(env);
      p.max_bits = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("SIGMA_LAB_MAX_BITS is not an integer: ") + env);
    }
  }
  if (opt.precision_bits) p.initial_bits = *opt.precision_bits;
  if (opt.max_precision_bits) p.max_bits = *opt.max_precision_bits;
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

std::string csv_join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + std::to_string(v[i]);
  return s;
}

// Loads the change-point cache into `finder`, runs `enumerate`, writes back.
std::vector<ChangePointRecord> changepoints_with_cache(ChangePointFinder& finder, std::uint64_t max_n,
                                                       const Options& opt) {
  const bool use_cache = !opt.cache_path.empty() && !opt.no_cache;
  std::vector<ChangePointRecord> cached;
  if (use_cache) {
    cached = read_cache(opt.cache_path);
    finder.seed(cached);
  }
  auto records = finder.enumerate(max_n);
  if (use_cache && records.size() > cached.size()) write_cache(opt.cache_path, records);
  return records;
}

int run_sigma(const std::string& n_text, const Options& opt, std::ostream& out) {
  const SigmaCertificate c = sigma_exact(parse_count(n_text, "n"), make_policy(opt));
  switch (opt.format) {
    case Format::Json: out << to_json(c).dump() << '\n'; break;
    case Format::Csv:
      out << "n,sigma,bits_used,method\n"
          << c.n << ',' << c.sigma << ',' << c.bits_used << ',' << to_string(c.method) << '\n';
      break;
    case Format::Text:
      out << "sigma_" << c.n << " = " << c.sigma << "  (" << to_string(c.method) << ", " << c.bits_used
          << " bits)\n";
      break;
  }
  return kExitOk;
}

int run_bracket(const std::string& n_text, const Options& opt, std::ostream& out) {
  const std::uint64_t n = parse_count(n_text, "n");
  if (n < 2) throw UsageError("bracket needs n >= 2");
  const CandidateBracket b = sigma_bracket(n, make_policy(opt).initial_bits);
  switch (opt.format) {
    case Format::Json: out << to_json(b).dump() << '\n'; break;
    case Format::Csv:
      out << "n,lower_lo,lower_hi,upper_lo,upper_hi,candidates\n"
          << b.n << ',' << b.lower.lo_string() << ',' << b.lower.hi_string() << ',' << b.upper.lo_string() << ','
          << b.upper.hi_string() << ',' << csv_join(b.candidates) << '\n';
      break;
    case Format::Text:
      out << "n = " << b.n << "\nlower ln(2n)QL(n)   " << b.lower.to_string(12) << "\nupper ln(2n)QR(n)+1 "
          << b.upper.to_string(12) << "\ncandidates          {" << csv_join(b.candidates) << "}\n";
      break;
  }
  return kExitOk;
}

int run_changepoints(std::uint64_t max_n, const Options& opt, std::ostream& out) {
  const PrecisionPolicy policy = make_policy(opt);
  ChangePointFinder finder(policy);
  const auto records = changepoints_with_cache(finder, max_n, opt);
  const auto gaps = corollary_gap_check(records);
  const auto quotients = quotient_report(records, policy.initial_bits);
  const auto decreasing = quotients_strictly_decreasing(quotients);
  switch (opt.format) {
    case Format::Json: {
      json j{{"max_n", max_n}, {"records", json::array()}, {"corollary_gap", gaps}, {"quotients", json::array()}};
      for (const auto& r : records) j["records"].push_back(to_json(r));
      for (const auto& q : quotients) j["quotients"].push_back(to_json(q));
      j["quotients_strictly_decreasing"] = decreasing ? json(*decreasing) : json(nullptr);
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "index,n,sigma,gap,quotient_lo,quotient_hi\n";
      for (const auto& r : records) {
        out << r.index << ',' << r.n_i << ',' << r.sigma_at << ',' << (r.gap ? std::to_string(*r.gap) : "") << ','
            << (r.quotient ? r.quotient->lo_string() : "") << ',' << (r.quotient ? r.quotient->hi_string() : "")
            << '\n';
      }
      break;
    case Format::Text:
      for (const auto& r : records) {
        out << "n_" << r.index << " = " << r.n_i << "  sigma = " << r.sigma_at;
        if (r.quotient) out << "  n_" << r.index + 1 << "/n_" << r.index << " in " << r.quotient->to_string(8);
        out << '\n';
      }
      out << "3 n_i <= n_(i+1) for all pairs: "
          << (std::all_of(gaps.begin(), gaps.end(), [](bool b) { return b; }) ? "yes" : "no") << '\n';
      out << "quotients strictly decreasing: " << (decreasing ? (*decreasing ? "yes" : "no") : "undecided") << '\n';
      break;
  }
  return kExitOk;
}

int run_na(const std::string& a_text, const Options& opt, std::ostream& out) {
  mpq_class a;
  try {
    a = parse_decimal(a_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a <= 1) throw UsageError("na needs a > 1");
  const NaResult r = n_a_of(a, make_policy(opt));
  switch (opt.format) {
    case Format::Json: out << to_json(r, a_text).dump() << '\n'; break;
    case Format::Csv: out << "a,n_a,n_env,r\n" << a_text << ',' << r.n_a << ',' << r.n_env << ',' << r.r << '\n'; break;
    case Format::Text:
      out << "a = " << a_text << "\nn_a = " << r.n_a << "\nn (n/e < a <= (n+1)/e) = " << r.n_env << "\nsigma_n = "
          << r.sigma_env << "\nr = " << r.r << '\n';
      break;
  }
  return kExitOk;
}

int run_verify(const std::string& suite, std::uint64_t max_n, const Options& opt, std::ostream& out) {
  const PrecisionPolicy policy = make_policy(opt);
  ChangePointFinder finder(policy);
  verify::SuiteOptions so;
  so.changepoint_max_n = max_n;
  if (suite == "all" || suite == "ffff") changepoints_with_cache(finder, max_n, opt);
  const auto reports = verify::run_suite(suite, policy, &finder, so);
  const verify::Verdict verdict = verify::overall(reports);
  switch (opt.format) {
    case Format::Json: {
      json j{{"suite", suite}, {"verdict", verify::to_string(verdict)}, {"reports", json::array()}};
      for (const auto& r : reports) j["reports"].push_back(to_json(r));
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "check_id,verdict,claims\n";
      for (const auto& r : reports) {
        std::string claims;
        for (const auto& [k, v] : r.params) {
          if (k == "claims") claims = v;
        }
        out << r.check_id << ',' << verify::to_string(r.verdict) << ',' << claims << '\n';
      }
      break;
    case Format::Text:
      for (const auto& r : reports) {
        out << verify::to_string(r.verdict) << "  " << r.check_id << '\n';
        for (const auto& w : r.witnesses) {
          out << "    " << w.label << ": " << (w.value ? w.value->to_string(15) : w.text) << '\n';
        }
      }
      out << "overall: " << verify::to_string(verdict) << '\n';
      break;
  }
  switch (verdict) {
    case verify::Verdict::Pass: return kExitOk;
    case verify::Verdict::Fail: return kExitFail;
    case verify::Verdict::Undecided: return kExitUndecided;
  }
  return kExitUndecided;
}

int run_table(const std::string& from_text, const std::string& to_text, const Options& opt, std::ostream& out) {
  const std::uint64_t from = parse_count(from_text, "--from");
  const std::uint64_t to = parse_count(to_text, "--to");
  if (from > to) throw UsageError("table needs --from <= --to");
  ChangePointFinder finder(make_policy(opt));
  const auto rows = finder.table(from, to);
  switch (opt.format) {
    case Format::Json: {
      json j = json::array();
      for (const auto& [n, s] : rows) j.push_back(json{{"n", n}, {"sigma", s}});
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "n,sigma\n";
      for (const auto& [n, s] : rows) out << n << ',' << s << '\n';
      break;
    case Format::Text:
      for (const auto& [n, s] : rows) out << n << ' ' << s << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified computation of sigma_n, its change points and n_a", "sigma-lab"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options opt;
  std::string format = "json";
  app.add_option("--format", format, "Output format: json (default), csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--precision-bits", opt.precision_bits, "Initial working precision in bits")
      ->check(CLI::Range(2U, 1U << 24));
  app.add_option("--max-precision-bits", opt.max_precision_bits, "Precision cap in bits (env SIGMA_LAB_MAX_BITS)")
      ->check(CLI::Range(2U, 1U << 24));

  std::string n_text, a_text, suite = "all", from_text, to_text;
  std::uint64_t max_n = 200'000;

  auto* sigma = app.add_subcommand("sigma", "Certified sigma_n");
  sigma->add_option("n", n_text, "Index n >= 1")->required();

  auto* bracket = app.add_subcommand("bracket", "Candidate bracket (ln(2n)QL(n), ln(2n)QR(n)+1)");
  bracket->add_option("n", n_text, "Index n >= 2")->required();

  auto* changepoints = app.add_subcommand("changepoints", "Change points n_i <= max-n");
  auto add_cache_flags = [&](CLI::App* sub) {
    sub->add_option("--max-n", max_n, "Largest change point to enumerate")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 62));
    sub->add_option("--cache", opt.cache_path, "Change-point cache file (line-delimited JSON)");
    sub->add_flag("--no-cache", opt.no_cache, "Ignore the cache file");
  };
  add_cache_flags(changepoints);

  auto* na = app.add_subcommand("na", "Smallest n with a^n <= n!");
  na->add_option("a", a_text, "Base a > 1 (decimal, parsed exactly)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run certified claim checks");
  std::vector<std::string> suites(std::begin(verify::kSuites), std::end(verify::kSuites));
  verify_cmd->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suites));
  add_cache_flags(verify_cmd);

  auto* table = app.add_subcommand("table", "sigma_n for every n in [from, to]");
  table->add_option("--from", from_text, "First n")->required();
  table->add_option("--to", to_text, "Last n")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUndecided;
  }

  opt.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
  try {
    if (sigma->parsed()) return run_sigma(n_text, opt, out);
    if (bracket->parsed()) return run_bracket(n_text, opt, out);
    if (changepoints->parsed()) return run_changepoints(max_n, opt, out);
    if (na->parsed()) return run_na(a_text, opt, out);
    if (verify_cmd->parsed()) return run_verify(suite, max_n, opt, out);
    if (table->parsed()) return run_table(from_text, to_text, opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const UndecidableError& e) {
    err << "undecided: " << e.what() << " (bits " << e.bits() << ")\n";
    return kExitUndecided;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUndecided;
  }
  err << "error: no command\n";
  return kExitUndecided;
}

}  // namespace sigmalab::cli
