// boolinfo command-line interface.
//
// Exit codes: 0 success/PASS, 1 FAIL, 2 INCONCLUSIVE, 64 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolinfo/chordcheck.hpp"
#include "boolinfo/compression.hpp"
#include "boolinfo/infomeasure.hpp"
#include "boolinfo/talpha.hpp"
#include "boolinfo/verify.hpp"

namespace fs = std::filesystem;
using namespace boolinfo;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 0;
  std::optional<double> alpha;
  std::optional<double> alpha_start, alpha_end;
  double alpha_step = 0.001;
  int depth_cap = kDefaultChordDepthCap;
  double epsilon = kDefaultChordEpsilon;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string output;
  std::string format;  ///< empty: the subcommand default
  std::string table;
  bool naive = false;
  std::string mode = "exhaustive";
  bool no_timing = false;
  int m = 10;
  std::string conjecture;
};

std::string fmt(double x, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

/// Either a single --alpha, an --alpha-start/--alpha-end grid, or the fallback.
std::vector<double> alphas_from(const RunConfig& cfg, const std::vector<double>& fallback) {
  if (cfg.alpha && (cfg.alpha_start || cfg.alpha_end)) throw UsageError("--alpha conflicts with --alpha-start/--alpha-end");
  if (cfg.alpha) return {*cfg.alpha};
  if (cfg.alpha_start || cfg.alpha_end) {
    if (!cfg.alpha_start || !cfg.alpha_end) throw UsageError("--alpha-start and --alpha-end go together");
    auto grid = alpha_grid(*cfg.alpha_start, *cfg.alpha_end, cfg.alpha_step);
    if (grid.empty()) throw UsageError("empty alpha grid");
    return grid;
  }
  return fallback;
}

/// The requested --format if allowed; the first allowed entry is the default.
std::string resolve_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  if (cfg.format.empty()) return *allowed.begin();
  for (const char* f : allowed)
    if (cfg.format == f) return f;
  throw UsageError("--format " + cfg.format + " is not supported by this subcommand");
}

/// Writes `content` to dir/name when --output is set.
void write_output(const RunConfig& cfg, const std::string& name, const std::string& content) {
  fs::create_directories(cfg.output);
  std::ofstream out(fs::path(cfg.output) / name);
  if (!out) throw std::runtime_error("cannot write " + (fs::path(cfg.output) / name).string());
  out << content;
}

int cmd_mi(const RunConfig& cfg) {
  if (cfg.table.empty()) throw UsageError("mi requires --table");
  if (!cfg.alpha) throw UsageError("mi requires --alpha");
  const auto format = resolve_format(cfg, {"text", "json"});
  const auto table = from_hex(cfg.table);
  const ChannelParam ch(*cfg.alpha);

  const auto posterior = cfg.naive ? posterior_naive(table, ch) : posterior_transform(table, ch);
  const double cond = cond_entropy(posterior);
  const double info = binary_entropy(table.zero_probability()) - cond;
  const double sum = sum_single_mi(table, ch);

  // 12 digits: the two posterior paths agree to ~1e-14, so --naive prints the same text
  if (format == "json") {
    nlohmann::ordered_json j;
    j["table"] = to_hex(table);
    j["alpha"] = *cfg.alpha;
    j["mutual_info"] = std::stod(fmt(info, 12));
    j["cond_entropy"] = std::stod(fmt(cond, 12));
    j["sum_single_mi"] = std::stod(fmt(sum, 12));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "table " << to_hex(table) << " alpha " << fmt(*cfg.alpha, 15) << '\n'
              << "I(b;Y^n)        " << fmt(info, 12) << '\n'
              << "H(b|Y^n)        " << fmt(cond, 12) << '\n'
              << "sum_i I(b;Y_i)  " << fmt(sum, 12) << '\n';
  }
  return kExitPass;
}

int cmd_enumerate(const RunConfig& cfg) {
  resolve_format(cfg, {"text"});
  const auto tables = enumerate_sn(cfg.n);
  std::ostringstream dump;
  dump << "# n=" << cfg.n << " count=" << tables.size() << '\n';
  for (const auto& t : tables) dump << to_hex(t) << '\n';
  if (cfg.output.empty()) {
    std::cout << dump.str();
  } else {
    write_output(cfg, "S" + std::to_string(cfg.n) + ".txt", dump.str());
    std::cout << tables.size() << '\n';
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg) {
  const auto format = resolve_format(cfg, {"text", "json"});
  const VerifyOptions options{cfg.tolerance, cfg.threads};
  VerificationReport report;
  const auto& id = cfg.conjecture;
  if (id == "conj1") {
    report = verify_conj1(cfg.n, alphas_from(cfg, default_alpha_grid()), options);
  } else if (id == "conj2") {
    report = verify_conj2(cfg.n, alphas_from(cfg, default_alpha_grid()), options);
  } else if (id == "sum") {
    if (cfg.mode != "exhaustive" && cfg.mode != "compressed") throw UsageError("sum takes --mode exhaustive|compressed");
    const auto mode = cfg.mode == "exhaustive" ? SumMode::Exhaustive : SumMode::Compressed;
    report = verify_sum_inequality(cfg.n, alphas_from(cfg, default_alpha_grid()), mode, options);
  } else if (id == "harper") {
    report = verify_harper(cfg.n, options);
  } else if (id == "triple-ce") {
    TripleSearchOptions search;
    if (cfg.mode == "random") search.mode = SearchMode::Random;
    else if (cfg.mode != "exhaustive") throw UsageError("triple-ce takes --mode exhaustive|random");
    search.seed = cfg.seed;
    const int lo = cfg.n ? cfg.n : 3;
    const int hi = cfg.n ? cfg.n : 5;
    report = verify_triple_counterexample(alphas_from(cfg, {0.05, 0.1, 0.2, 0.3}), lo, hi, options, search);
  } else {
    throw UsageError("unknown conjecture '" + id + "'");
  }

  if (!cfg.output.empty()) {
    const auto path = write_report(report, cfg.output, !cfg.no_timing);
    std::cerr << "wrote " << path.string() << '\n';
  }
  if (format == "json") std::cout << to_json(report, !cfg.no_timing).dump(2) << '\n';
  else std::cout << text_summary(report);
  return report.outcome == Outcome::Pass ? kExitPass : kExitFail;
}

int cmd_chords(const RunConfig& cfg) {
  const auto format = resolve_format(cfg, {"text", "json", "csv"});
  std::vector<ChordCertificate> certs;
  if (cfg.alpha && !cfg.alpha_start && !cfg.alpha_end) {
    certs.push_back(test_inequality(ChannelParam(*cfg.alpha), cfg.depth_cap, cfg.epsilon));
  } else {
    const auto grid = alphas_from(cfg, {0.1});
    certs = sweep(grid.front(), grid.back(), cfg.alpha_step, cfg.depth_cap, cfg.epsilon, cfg.threads);
  }

  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  std::ostringstream csv;
  bool inconclusive = false;
  for (const auto& cert : certs) {
    all.push_back(to_json(cert));
    if (cert.status != CertificateStatus::Verified) inconclusive = true;
  }
  if (certs.size() == 1) write_chords_csv(csv, certs.front());

  if (!cfg.output.empty()) {
    for (const auto& cert : certs) {
      const std::string stem = "chords_alpha" + fmt(cert.alpha, 6);
      write_output(cfg, stem + ".json", to_json(cert).dump(2) + "\n");
      std::ostringstream one;
      write_chords_csv(one, cert);
      write_output(cfg, stem + ".csv", one.str());
    }
  }

  if (format == "json") {
    std::cout << (certs.size() == 1 ? all.front() : all).dump(2) << '\n';
  } else if (format == "csv") {
    if (certs.size() != 1) throw UsageError("--format csv needs a single --alpha");
    std::cout << csv.str();
  } else {
    std::size_t verified = 0;
    for (const auto& cert : certs) {
      if (cert.status == CertificateStatus::Verified) ++verified;
      if (certs.size() == 1 || cert.status != CertificateStatus::Verified)
        std::cout << "alpha " << fmt(cert.alpha, 6) << ' ' << to_string(cert.status) << ' ' << cert.chords.size()
                  << " chords, max depth " << cert.max_depth_reached << '\n';
    }
    if (certs.size() > 1) std::cout << verified << '/' << certs.size() << " VERIFIED\n";
  }
  return inconclusive ? kExitInconclusive : kExitPass;
}

int cmd_figure(const RunConfig& cfg) {
  resolve_format(cfg, {"csv"});
  const ChannelParam ch(cfg.alpha.value_or(0.1));
  std::ostringstream curve;
  write_curve_csv(curve, cfg.m, ch);
  std::ostringstream chords;
  const auto cert = test_inequality(ch, cfg.depth_cap, cfg.epsilon);
  write_chords_csv(chords, cert);

  if (cfg.output.empty()) {
    std::cout << curve.str();
  } else {
    write_output(cfg, "figure_curve.csv", curve.str());
    write_output(cfg, "figure_chords.csv", chords.str());
  }
  return cert.status == CertificateStatus::Verified ? kExitPass : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mutual-information computations for Boolean functions of BSC-corrupted inputs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_alpha = [&](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "crossover probability in [0, 1/2]");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--alpha-start", cfg.alpha_start, "first alpha of a grid");
    sub->add_option("--alpha-end", cfg.alpha_end, "last alpha of a grid (inclusive)");
    sub->add_option("--alpha-step", cfg.alpha_step, "grid step")->capture_default_str();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "worker threads, 0 = all cores")->capture_default_str();
    sub->add_option("--output", cfg.output, "output directory");
    sub->add_option("--format", cfg.format, "json|csv|text (default depends on the subcommand)");
    sub->add_option("--seed", cfg.seed, "seed for randomized search")->capture_default_str();
  };

  auto* mi = app.add_subcommand("mi", "I(b;Y^n), H(b|Y^n) and sum_i I(b;Y_i) for one table");
  mi->add_option("--table", cfg.table, "table as n=<n>:<hex>")->required();
  add_alpha(mi);
  mi->add_flag("--naive", cfg.naive, "use the direct O(4^n) posterior");
  add_common(mi);

  auto* enumerate = app.add_subcommand("enumerate", "dump every member of S_n");
  enumerate->add_option("--n", cfg.n, "arity")->required();
  add_common(enumerate);

  auto* verify = app.add_subcommand("verify", "run a conjecture driver");
  verify->add_option("conjecture", cfg.conjecture, "conj1|conj2|sum|harper|triple-ce")
      ->required()
      ->check(CLI::IsMember({"conj1", "conj2", "sum", "harper", "triple-ce"}));
  verify->add_option("--n", cfg.n, "arity (triple-ce: restrict to one arity)");
  add_alpha(verify);
  add_grid(verify);
  verify->add_option("--tolerance", cfg.tolerance, "comparison tolerance")->capture_default_str();
  verify->add_option("--mode", cfg.mode, "sum: exhaustive|compressed; triple-ce: exhaustive|random")
      ->capture_default_str();
  verify->add_flag("--no-timing", cfg.no_timing, "omit wall-clock timing from JSON output");
  add_common(verify);

  auto* chords = app.add_subcommand("chords", "chord certificates for T_alpha(p) >= f(p)H(alpha)");
  add_alpha(chords);
  add_grid(chords);
  chords->add_option("--depth-cap", cfg.depth_cap, "maximum bisection depth")->capture_default_str();
  chords->add_option("--epsilon", cfg.epsilon, "acceptance slack")->capture_default_str();
  add_common(chords);

  auto* figure = app.add_subcommand("figure", "T_alpha curve and chord overlay as CSV");
  add_alpha(figure);
  figure->add_option("--m", cfg.m, "sample p = k/2^m")->capture_default_str();
  figure->add_option("--depth-cap", cfg.depth_cap, "maximum bisection depth")->capture_default_str();
  figure->add_option("--epsilon", cfg.epsilon, "acceptance slack")->capture_default_str();
  add_common(figure);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cfg.threads < 0) throw UsageError("--threads must be >= 0");
    if (*mi) return cmd_mi(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*chords) return cmd_chords(cfg);
    if (*figure) return cmd_figure(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // precondition violations: alpha out of range, arity over a cap, malformed table
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
