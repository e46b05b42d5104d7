#pragma once

#include <cstdint>
#include <vector>

#include "boolinfo/core.hpp"

namespace boolinfo {

/// Largest arity accepted by the O(4^n) brute-force posterior.
inline constexpr int kMaxNaiveArity = 12;

/// values[y] = Pr{b(X^n) = 0 | Y^n = y} for every y in Omega_n.
struct PosteriorField {
  int n = 0;
  std::vector<double> values;
};

/// Posterior of b under BSC(alpha) by a per-coordinate butterfly: each of the
/// n stages splits a coordinate into sum and difference, scales the
/// difference by (1 - 2 alpha) and recombines. O(n 2^n).
PosteriorField posterior_transform(const TruthTable& b, ChannelParam ch);

/// Direct sum over x in B of alpha^d(x,y) (1-alpha)^(n-d(x,y)). O(4^n); test oracle.
PosteriorField posterior_naive(const TruthTable& b, ChannelParam ch);

/// 2^-n sum_y h(p_y). Entries are clamped into [0,1]; a raw entry further
/// than 1e-9 outside that range is reported as std::logic_error.
double cond_entropy(const PosteriorField& posterior);

/// H(b(X^n) | Y^n).
double cond_entropy(const TruthTable& b, ChannelParam ch);

/// I(b(X^n); Y^n) = h(|B| / 2^n) - H(b(X^n) | Y^n).
double mutual_info(const TruthTable& b, ChannelParam ch);

/// I(b(X^n); Y_i) for a 1-based coordinate i.
double mutual_info_single(const TruthTable& b, ChannelParam ch, int coordinate);

/// sum_i I(b(X^n); Y_i).
double sum_single_mi(const TruthTable& b, ChannelParam ch);

/// Number of hypercube edges with exactly one endpoint in B.
std::uint64_t edge_boundary(const TruthTable& b);

}  // namespace boolinfo
