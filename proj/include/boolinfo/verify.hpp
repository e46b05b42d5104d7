#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "boolinfo/compression.hpp"
#include "boolinfo/core.hpp"

namespace boolinfo {

enum class ConjectureId { Conj1, Conj2, SumIneq, Harper, TripleCe };
enum class Outcome { Pass, Fail, Partial };

std::string to_string(ConjectureId id);
std::string to_string(Outcome outcome);

/// One extremal function found by a driver.
///
/// `margin` is signed slack against the claim being checked: a claim holds
/// for the witness when margin >= -tolerance (Harper: margin == 0 exactly).
struct Witness {
  std::string table;  ///< core hex serialization
  double alpha = 0;   ///< NaN when the claim does not involve a channel
  std::size_t size = 0;
  double value = 0;
  double margin = 0;
  std::string note;
};

struct VerificationReport {
  ConjectureId conjecture = ConjectureId::Conj1;
  int n_min = 0;
  int n_max = 0;
  std::vector<double> alpha_grid;
  Outcome outcome = Outcome::Fail;
  std::vector<Witness> witnesses;
  std::vector<std::pair<std::string, double>> tolerances;
  std::vector<std::pair<std::string, double>> timing;  ///< seconds per stage
};

struct VerifyOptions {
  double tolerance = 1e-9;
  int threads = 0;  ///< 0 = hardware parallelism
};

/// {0.01, 0.03, ..., 0.49}
std::vector<double> default_alpha_grid();

/// For every |B| = k, min over S_n of H(b|Y^n) against the lex value.
/// A class passes when min >= lex - tolerance; functions within tolerance of
/// the lex value are counted as co-minimizers in the witness note.
VerificationReport verify_conj2(int n, std::span<const double> alphas, const VerifyOptions& options = {});
VerificationReport verify_conj2(int n, ChannelParam ch, double tolerance = 1e-9);

/// max over S_n of I(b; Y^n) <= 1 - H(alpha) + tolerance for every alpha.
/// Outcome is Partial when the bound holds but some maximum falls short of
/// 1 - H(alpha) by more than the tolerance (the dictator should attain it).
VerificationReport verify_conj1(int n, std::span<const double> alphas, const VerifyOptions& options = {});

enum class SumMode { Exhaustive, Compressed };

/// Largest arity for SumMode::Exhaustive (all 2^(2^n) functions).
inline constexpr int kMaxExhaustiveArity = 4;

/// max of sum_i I(b; Y_i) <= 1 - H(alpha) + tolerance.
VerificationReport verify_sum_inequality(int n, std::span<const double> alphas, SumMode mode,
                                         const VerifyOptions& options = {});

/// Exhaustive edge-isoperimetric check: per size k, the minimum boundary over
/// all subsets equals the boundary of L_n(k).
VerificationReport verify_harper(int n, const VerifyOptions& options = {});

/// Triple-compression counterexample search at every (n, alpha). Each hit is
/// also checked against full compression: H(L_n(|B|) | Y) <= H(B | Y) + 1e-12.
/// Pass iff at least one hit and every hit passes that check.
VerificationReport verify_triple_counterexample(std::span<const double> alphas, int n_min = 3, int n_max = 5,
                                                const VerifyOptions& options = {},
                                                const TripleSearchOptions& search = {});

/// Stable-order JSON; timing is omitted when include_timing is false, which
/// makes the output a pure function of the inputs.
nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing = true);

std::string text_summary(const VerificationReport& report);

/// Writes <ID>_n<k>_<timestamp>.json and a matching .txt summary into dir;
/// returns the JSON path.
std::filesystem::path write_report(const VerificationReport& report, const std::filesystem::path& dir,
                                   bool include_timing = true);

}  // namespace boolinfo
