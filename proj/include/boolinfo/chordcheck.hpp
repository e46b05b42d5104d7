#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "boolinfo/core.hpp"

namespace boolinfo {

/// Exact dyadic rational num / 2^log2den.
struct Dyadic {
  std::uint64_t num = 0;
  int log2den = 0;

  double value() const noexcept;
  Dyadic reduced() const noexcept;
  LexSpec spec() const { return LexSpec(log2den, num); }

  /// Exact comparison by cross-scaling to a common denominator.
  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept;
  friend bool operator<(const Dyadic& a, const Dyadic& b) noexcept;
};

struct Chord {
  Dyadic p_minus;  ///< k / 2^depth
  Dyadic p_plus;   ///< (k + 1) / 2^depth
  double nu = 0;   ///< min over the chord of C(x) - f(x) H(alpha)
  int depth = 0;
};

enum class CertificateStatus { Verified, Inconclusive };

std::string to_string(CertificateStatus status);

struct ChordCertificate {
  double alpha = 0;
  std::vector<Chord> chords;  ///< accepted chords sorted by p_minus
  CertificateStatus status = CertificateStatus::Inconclusive;
  int max_depth_reached = 0;
  double epsilon = 0;
  int depth_cap = 0;
  /// First interval that could not be accepted within the caps.
  std::optional<Chord> failing;
};

/// D(x) = C(x) - f(x) H for the chord through (a, ta) and (b, tb).
double chord_deficit(double x, double a, double b, double ta, double tb, double h);

/// Closed-form min of chord_deficit on [a, b]. D is convex, and its
/// stationary point solves s + H (log2 x + log2 e) = 0, i.e.
/// x* = 2^(-s/H) / e, which is clamped into [a, b].
double chord_deficit_min(double a, double b, double ta, double tb, double h);

/// CheckChord on [a, b] within [1/2, 1]; T_alpha is evaluated at the exact
/// dyadic endpoints. Rejects alpha in {0, 1/2}, a >= b, and chords narrower
/// than 2^-depth_cap.
double check_chord(const Dyadic& a, const Dyadic& b, ChannelParam ch, int depth_cap = 40);

inline constexpr int kDefaultChordDepthCap = 40;
inline constexpr double kDefaultChordEpsilon = 1e-12;

/// Recursive bisection of [1/2, 1]: a chord is accepted when its minimum
/// deficit is >= -epsilon, otherwise it is split at its midpoint. The result
/// is Inconclusive if a chord deeper than depth_cap (or deeper than the
/// T_alpha evaluator allows) would be needed.
ChordCertificate test_inequality(ChannelParam ch, int depth_cap = kDefaultChordDepthCap,
                                 double epsilon = kDefaultChordEpsilon);

/// Grid alpha_j = start + j * step for j = 0.. while alpha_j <= end (+1e-9 step slack).
std::vector<double> alpha_grid(double start, double end, double step);

/// test_inequality at every grid point, in grid order.
std::vector<ChordCertificate> sweep(double alpha_start, double alpha_end, double alpha_step,
                                    int depth_cap = kDefaultChordDepthCap,
                                    double epsilon = kDefaultChordEpsilon, int threads = 1);

/// {alpha, status, epsilon, depth_cap, max_depth_reached, chords[...]}.
nlohmann::ordered_json to_json(const ChordCertificate& cert);

/// "p_minus,p_plus,nu,depth" rows.
void write_chords_csv(std::ostream& out, const ChordCertificate& cert);

}  // namespace boolinfo
