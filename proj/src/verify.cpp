#include "boolinfo/verify.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "boolinfo/compression.hpp"
#include "boolinfo/infomeasure.hpp"
#include "boolinfo/parallel.hpp"

namespace boolinfo {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kNoAlpha = std::numeric_limits<double>::quiet_NaN();
constexpr double kParentheticalSlack = 1e-12;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_enumerable(int n) {
  if (n < 1 || n > kMaxEnumerationArity)
    throw CapExceeded("driver arity must be in 1.." + std::to_string(kMaxEnumerationArity));
}

std::vector<TruthTable> all_functions(int n) {
  if (n < 1 || n > kMaxExhaustiveArity)
    throw CapExceeded("exhaustive mode limited to n <= " + std::to_string(kMaxExhaustiveArity));
  const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
  std::vector<TruthTable> out;
  out.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) out.push_back(TruthTable::from_words(n, {bits}));
  return out;
}

/// values[j] = metric(tables[j]) computed across the worker pool.
template <class Metric>
std::vector<double> evaluate(const std::vector<TruthTable>& tables, int threads, Metric metric) {
  std::vector<double> values(tables.size());
  parallel_for(tables.size(), threads, [&](std::size_t j) { values[j] = metric(tables[j]); });
  return values;
}

std::string join_coords(const CoordSet& coords) {
  std::string s = "{";
  for (std::size_t j = 0; j < coords.size(); ++j) s += (j ? "," : "") + std::to_string(coords[j]);
  return s + "}";
}

}  // namespace

std::string to_string(ConjectureId id) {
  switch (id) {
    case ConjectureId::Conj1: return "CONJ1";
    case ConjectureId::Conj2: return "CONJ2";
    case ConjectureId::SumIneq: return "SUM_INEQ";
    case ConjectureId::Harper: return "HARPER";
    case ConjectureId::TripleCe: return "TRIPLE_CE";
  }
  return "UNKNOWN";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "PASS";
    case Outcome::Fail: return "FAIL";
    case Outcome::Partial: return "PARTIAL";
  }
  return "UNKNOWN";
}

std::vector<double> default_alpha_grid() {
  std::vector<double> grid;
  for (int j = 0; j < 25; ++j) grid.push_back(0.01 + 0.02 * j);
  return grid;
}

VerificationReport verify_conj2(int n, std::span<const double> alphas, const VerifyOptions& options) {
  require_enumerable(n);
  VerificationReport report;
  report.conjecture = ConjectureId::Conj2;
  report.n_min = report.n_max = n;
  report.alpha_grid.assign(alphas.begin(), alphas.end());
  report.tolerances = {{"entropy", options.tolerance}};

  auto start = Clock::now();
  const auto tables = enumerate_sn(n);
  report.timing.emplace_back("enumerate", seconds_since(start));

  start = Clock::now();
  const std::size_t classes = (std::size_t{1} << n) + 1;
  bool all_pass = true;
  for (double a : alphas) {
    const ChannelParam ch(a);
    const auto entropy = evaluate(tables, options.threads, [&](const TruthTable& t) { return cond_entropy(t, ch); });

    std::vector<double> lex(classes);
    for (std::size_t k = 0; k < classes; ++k) lex[k] = cond_entropy(initial_segment(n, k), ch);

    std::vector<std::size_t> argmin(classes, tables.size());
    std::vector<std::size_t> ties(classes, 0);
    for (std::size_t j = 0; j < tables.size(); ++j) {
      const std::size_t k = tables[j].count();
      if (argmin[k] == tables.size() || entropy[j] < entropy[argmin[k]]) argmin[k] = j;
      if (std::abs(entropy[j] - lex[k]) <= options.tolerance) ++ties[k];
    }
    for (std::size_t k = 0; k < classes; ++k) {
      const auto& best = tables[argmin[k]];
      const double margin = entropy[argmin[k]] - lex[k];
      const bool pass = margin >= -options.tolerance;
      all_pass = all_pass && pass;
      std::string note = is_lex(best) ? "argmin is lex" : "argmin is not lex";
      note += "; co_minimizers=" + std::to_string(ties[k]);
      report.witnesses.push_back({to_hex(best), a, k, entropy[argmin[k]], margin, std::move(note)});
    }
  }
  report.timing.emplace_back("evaluate", seconds_since(start));
  report.outcome = all_pass ? Outcome::Pass : Outcome::Fail;
  return report;
}

VerificationReport verify_conj2(int n, ChannelParam ch, double tolerance) {
  const double a = ch.alpha();
  return verify_conj2(n, std::span<const double>(&a, 1), VerifyOptions{tolerance, 0});
}

VerificationReport verify_conj1(int n, std::span<const double> alphas, const VerifyOptions& options) {
  require_enumerable(n);
  VerificationReport report;
  report.conjecture = ConjectureId::Conj1;
  report.n_min = report.n_max = n;
  report.alpha_grid.assign(alphas.begin(), alphas.end());
  report.tolerances = {{"mutual_info", options.tolerance}};

  auto start = Clock::now();
  const auto tables = enumerate_sn(n);
  report.timing.emplace_back("enumerate", seconds_since(start));

  start = Clock::now();
  const auto dictator = initial_segment(n, std::size_t{1} << (n - 1));
  bool bound_holds = true;
  bool attained = true;
  for (double a : alphas) {
    const ChannelParam ch(a);
    const auto info = evaluate(tables, options.threads, [&](const TruthTable& t) { return mutual_info(t, ch); });
    std::size_t best = 0;
    for (std::size_t j = 1; j < tables.size(); ++j)
      if (info[j] > info[best]) best = j;
    const double bound = 1.0 - binary_entropy(a);
    const double margin = bound - info[best];
    bound_holds = bound_holds && margin >= -options.tolerance;
    attained = attained && std::abs(margin) <= options.tolerance;
    report.witnesses.push_back({to_hex(tables[best]), a, tables[best].count(), info[best], margin,
                                tables[best] == dictator ? "maximizer is the dictator" : "maximizer is not the dictator"});
  }
  report.timing.emplace_back("evaluate", seconds_since(start));
  report.outcome = !bound_holds ? Outcome::Fail : attained ? Outcome::Pass : Outcome::Partial;
  return report;
}

VerificationReport verify_sum_inequality(int n, std::span<const double> alphas, SumMode mode,
                                         const VerifyOptions& options) {
  VerificationReport report;
  report.conjecture = ConjectureId::SumIneq;
  report.n_min = report.n_max = n;
  report.alpha_grid.assign(alphas.begin(), alphas.end());
  report.tolerances = {{"mutual_info", options.tolerance}};

  auto start = Clock::now();
  std::vector<TruthTable> tables;
  if (mode == SumMode::Exhaustive) {
    tables = all_functions(n);
  } else {
    require_enumerable(n);
    tables = enumerate_sn(n);
  }
  report.timing.emplace_back("enumerate", seconds_since(start));

  start = Clock::now();
  bool all_pass = true;
  for (double a : alphas) {
    const ChannelParam ch(a);
    const auto sums = evaluate(tables, options.threads, [&](const TruthTable& t) { return sum_single_mi(t, ch); });
    std::size_t best = 0;
    for (std::size_t j = 1; j < tables.size(); ++j)
      if (sums[j] > sums[best]) best = j;
    const double margin = 1.0 - binary_entropy(a) - sums[best];
    all_pass = all_pass && margin >= -options.tolerance;
    report.witnesses.push_back({to_hex(tables[best]), a, tables[best].count(), sums[best], margin,
                                mode == SumMode::Exhaustive ? "exhaustive" : "compressed family"});
  }
  report.timing.emplace_back("evaluate", seconds_since(start));
  report.outcome = all_pass ? Outcome::Pass : Outcome::Fail;
  return report;
}

VerificationReport verify_harper(int n, const VerifyOptions& options) {
  VerificationReport report;
  report.conjecture = ConjectureId::Harper;
  report.n_min = report.n_max = n;
  report.tolerances = {{"edge_boundary", 0.0}};

  auto start = Clock::now();
  const auto tables = all_functions(n);
  report.timing.emplace_back("enumerate", seconds_since(start));

  start = Clock::now();
  const auto boundary = evaluate(tables, options.threads,
                                 [](const TruthTable& t) { return static_cast<double>(edge_boundary(t)); });
  const std::size_t classes = (std::size_t{1} << n) + 1;
  std::vector<std::size_t> argmin(classes, tables.size());
  for (std::size_t j = 0; j < tables.size(); ++j) {
    const std::size_t k = tables[j].count();
    if (argmin[k] == tables.size() || boundary[j] < boundary[argmin[k]]) argmin[k] = j;
  }
  bool all_pass = true;
  for (std::size_t k = 0; k < classes; ++k) {
    const auto lex = static_cast<double>(edge_boundary(initial_segment(n, k)));
    const double margin = boundary[argmin[k]] - lex;
    all_pass = all_pass && margin == 0.0;
    report.witnesses.push_back({to_hex(tables[argmin[k]]), kNoAlpha, k, boundary[argmin[k]], margin,
                                "lex boundary " + std::to_string(static_cast<std::uint64_t>(lex))});
  }
  report.timing.emplace_back("evaluate", seconds_since(start));
  report.outcome = all_pass ? Outcome::Pass : Outcome::Fail;
  return report;
}

VerificationReport verify_triple_counterexample(std::span<const double> alphas, int n_min, int n_max,
                                                const VerifyOptions& options, const TripleSearchOptions& search) {
  if (n_min > n_max) throw std::invalid_argument("n_min > n_max");
  VerificationReport report;
  report.conjecture = ConjectureId::TripleCe;
  report.n_min = n_min;
  report.n_max = n_max;
  report.alpha_grid.assign(alphas.begin(), alphas.end());
  report.tolerances = {{"entropy_increase", search.margin}, {"full_compression", kParentheticalSlack}};

  struct Task {
    int n;
    double alpha;
  };
  std::vector<Task> tasks;
  for (int n = n_min; n <= n_max; ++n)
    for (double a : alphas) tasks.push_back({n, a});

  const auto start = Clock::now();
  std::vector<std::optional<TripleCounterexample>> hits(tasks.size());
  parallel_for(tasks.size(), options.threads, [&](std::size_t j) {
    hits[j] = find_triple_counterexample(tasks[j].n, ChannelParam(tasks[j].alpha), search);
  });

  bool any = false;
  bool parenthetical = true;
  for (std::size_t j = 0; j < tasks.size(); ++j) {
    if (!hits[j]) continue;
    any = true;
    const auto& hit = *hits[j];
    const ChannelParam ch(tasks[j].alpha);
    const double own = cond_entropy(hit.table, ch);
    const double full = cond_entropy(initial_segment(hit.table.arity(), hit.table.count()), ch);
    const double margin = own - full;
    parenthetical = parenthetical && margin >= -kParentheticalSlack;
    report.witnesses.push_back({to_hex(hit.table), tasks[j].alpha, hit.table.count(), hit.delta, margin,
                                "I=" + join_coords(hit.coords) + "; compressed=" + to_hex(compress(hit.table, hit.coords))});
  }
  report.timing.emplace_back("search", seconds_since(start));
  report.outcome = any && parenthetical ? Outcome::Pass : Outcome::Fail;
  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["conjecture_id"] = to_string(report.conjecture);
  if (report.n_min == report.n_max) j["n"] = report.n_min;
  else j["n"] = std::to_string(report.n_min) + ".." + std::to_string(report.n_max);
  j["alpha_grid"] = report.alpha_grid;
  j["outcome"] = to_string(report.outcome);
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses) {
    nlohmann::ordered_json wj;
    wj["table"] = w.table;
    if (std::isnan(w.alpha)) wj["alpha"] = nullptr;
    else wj["alpha"] = w.alpha;
    wj["size"] = w.size;
    wj["value"] = w.value;
    wj["margin"] = w.margin;
    wj["note"] = w.note;
    j["witnesses"].push_back(std::move(wj));
  }
  j["tolerances"] = nlohmann::ordered_json::object();
  for (const auto& [name, tol] : report.tolerances) j["tolerances"][name] = tol;
  if (include_timing) {
    j["timing"] = nlohmann::ordered_json::object();
    for (const auto& [stage, secs] : report.timing) j["timing"][stage] = secs;
  }
  return j;
}

std::string text_summary(const VerificationReport& report) {
  std::ostringstream out;
  out << to_string(report.conjecture) << " n=";
  if (report.n_min == report.n_max) out << report.n_min;
  else out << report.n_min << ".." << report.n_max;
  out << " outcome=" << to_string(report.outcome) << " witnesses=" << report.witnesses.size() << '\n';

  double worst = std::numeric_limits<double>::infinity();
  const Witness* worst_w = nullptr;
  for (const auto& w : report.witnesses)
    if (w.margin < worst) {
      worst = w.margin;
      worst_w = &w;
    }
  if (worst_w) {
    out << "  smallest margin " << std::setprecision(17) << worst << " at " << worst_w->table;
    if (!std::isnan(worst_w->alpha)) out << " alpha=" << std::setprecision(15) << worst_w->alpha;
    out << " (" << worst_w->note << ")\n";
  }
  for (const auto& [stage, secs] : report.timing) out << "  " << stage << ": " << std::setprecision(3) << secs << " s\n";
  return out.str();
}

std::filesystem::path write_report(const VerificationReport& report, const std::filesystem::path& dir,
                                   bool include_timing) {
  std::filesystem::create_directories(dir);
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  std::ostringstream stem;
  stem << to_string(report.conjecture) << "_n";
  if (report.n_min == report.n_max) stem << report.n_min;
  else stem << report.n_min << '-' << report.n_max;
  stem << '_' << std::put_time(&utc, "%Y%m%dT%H%M%SZ");

  const auto json_path = dir / (stem.str() + ".json");
  std::ofstream(json_path) << to_json(report, include_timing).dump(2) << '\n';
  std::ofstream(dir / (stem.str() + ".txt")) << text_summary(report);
  return json_path;
}

}  // namespace boolinfo
