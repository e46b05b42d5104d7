#pragma once

#include <cstdint>
#include <iosfwd>

#include "boolinfo/core.hpp"

namespace boolinfo {

/// Depth cap of the implicit evaluator (2^26 doubles of scratch at the cap).
inline constexpr int kMaxTalphaDepth = 26;

/// Depth cap of the dense oracle.
inline constexpr int kMaxTalphaDenseDepth = 12;

/// T_alpha(p) = E_Y f(Pr{b(X^m) = 0 | Y^m}) for the lex function with
/// Pr{b = 0} = k / 2^m.
///
/// With digits b_1..b_m of k (most significant first) and u_i the posterior
/// Pr{X_i = 0 | Y_i} in {1 - alpha, alpha}, the posterior of the lex set is the
/// fold v = 0; for i = m..1: v = b_i ? u_i + (1 - u_i) v : u_i v. The 2^m
/// leaves are produced level by level, doubling a buffer, then averaged.
///
/// Requires 0 < alpha < 1/2 except when k is 0 or 2^m (result 0). The spec is
/// reduced first, so only the depth of the reduced fraction counts against
/// `depth_cap`.
double t_alpha(const LexSpec& spec, ChannelParam ch, int depth_cap = kMaxTalphaDepth);

/// Oracle: builds the explicit lex table and averages f over its posterior.
double t_alpha_dense(const LexSpec& spec, ChannelParam ch);

/// |2 T(p) - T(2p) - 2p H(alpha)| for p <= 1/2.
double functional_identity_gap(const LexSpec& spec, ChannelParam ch);

/// T((2k+1)/2^(m+1)) - [T(k/2^m) + T((k+1)/2^m)] / 2 for 0 <= k < 2^m.
double midpoint_concavity_gap(int depth, std::uint64_t numerator, ChannelParam ch);

/// sum_{j < terms} 2^-j dist(2^j p, Z). Exact for dyadic p once terms >= depth.
double takagi(const LexSpec& p, int terms);
double takagi(const LexSpec& p);

/// 2^n takagi(k / 2^n) in exact integer arithmetic.
std::uint64_t takagi_scaled(int n, std::uint64_t k);

/// Smallest alpha treated as outside the small-noise regime of takagi_limit_gap.
inline constexpr double kTakagiRegimeAlpha = 1e-3;

/// |T_alpha(p) / H(alpha) - takagi(p)|. Meaningful for alpha <= 1e-3; larger
/// alpha is evaluated anyway and flagged through `outside_regime`.
double takagi_limit_gap(const LexSpec& spec, ChannelParam ch, bool* outside_regime = nullptr);

/// CSV "p,t_alpha,f_times_H" with one row per p = k / 2^m, k = 0..2^m,
/// 17 significant digits.
void write_curve_csv(std::ostream& out, int depth, ChannelParam ch);

}  // namespace boolinfo
