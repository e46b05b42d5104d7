#include "boolinfo/talpha.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "boolinfo/infomeasure.hpp"

namespace boolinfo {

namespace {

/// Pairwise sum of v[0..n), destroying v.
double pairwise_sum(std::vector<double>& v, std::size_t n) {
  if (n == 0) return 0.0;
  while (n > 1) {
    const std::size_t half = n / 2;
    for (std::size_t j = 0; j < half; ++j) v[j] = v[2 * j] + v[2 * j + 1];
    if (n & 1u) {
      v[half] = v[n - 1];
      n = half + 1;
    } else {
      n = half;
    }
  }
  return v[0];
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

double t_alpha(const LexSpec& spec, ChannelParam ch, int depth_cap) {
  const LexSpec r = spec.reduced();
  const int m = r.depth();
  const std::uint64_t k = r.numerator();
  if (k == 0 || k == (std::uint64_t{1} << m)) return 0.0;
  const double a = ch.alpha();
  if (!(a > 0.0 && a < 0.5)) throw std::domain_error("t_alpha requires 0 < alpha < 1/2 for nontrivial p");
  if (m > depth_cap || m > kMaxTalphaDepth)
    throw CapExceeded("t_alpha depth " + std::to_string(m) + " exceeds cap " +
                      std::to_string(std::min(depth_cap, kMaxTalphaDepth)));

  // Level sets of the fold, innermost digit first. After processing digit i
  // the buffer holds one value per (u_i, ..., u_m); doubling is done in place
  // from the back so each source entry is read before it is overwritten.
  std::vector<double> buf(std::size_t{1} << m);
  buf[0] = 0.0;
  std::size_t len = 1;
  const double u0 = 1.0 - a;
  const double u1 = a;
  for (int i = m; i >= 1; --i) {
    const bool digit = (k >> (m - i)) & 1u;
    for (std::size_t j = len; j-- > 0;) {
      const double v = buf[j];
      if (digit) {
        buf[2 * j + 1] = u1 + (1.0 - u1) * v;
        buf[2 * j] = u0 + (1.0 - u0) * v;
      } else {
        buf[2 * j + 1] = u1 * v;
        buf[2 * j] = u0 * v;
      }
    }
    len *= 2;
  }
  for (std::size_t j = 0; j < len; ++j) buf[j] = entropy_f(std::clamp(buf[j], 0.0, 1.0));
  return std::ldexp(pairwise_sum(buf, len), -m);
}

double t_alpha_dense(const LexSpec& spec, ChannelParam ch) {
  if (spec.depth() > kMaxTalphaDenseDepth)
    throw CapExceeded("t_alpha_dense limited to depth <= " + std::to_string(kMaxTalphaDenseDepth));
  const auto posterior = posterior_transform(lex_of(spec), ch);
  double acc = 0.0;
  for (double p : posterior.values) acc += entropy_f(std::clamp(p, 0.0, 1.0));
  return acc / static_cast<double>(posterior.values.size());
}

double functional_identity_gap(const LexSpec& spec, ChannelParam ch) {
  const LexSpec r = spec.reduced();
  if (r.depth() == 0 && r.numerator() == 0) return 0.0;
  if (r.depth() == 0) throw std::domain_error("functional identity needs p <= 1/2");
  // p <= 1/2 iff k <= 2^(m-1)
  if (r.numerator() > (std::uint64_t{1} << (r.depth() - 1))) throw std::domain_error("functional identity needs p <= 1/2");
  const LexSpec doubled(r.depth() - 1, r.numerator());
  const double p = r.probability();
  return std::abs(2.0 * t_alpha(r, ch) - t_alpha(doubled, ch) - 2.0 * p * binary_entropy(ch.alpha()));
}

double midpoint_concavity_gap(int depth, std::uint64_t numerator, ChannelParam ch) {
  if (depth < 0 || depth >= LexSpec::kMaxDepth) throw std::out_of_range("depth out of range");
  if (numerator >= (std::uint64_t{1} << depth)) throw std::out_of_range("numerator must satisfy k < 2^m");
  const double mid = t_alpha(LexSpec(depth + 1, 2 * numerator + 1), ch);
  const double lo = t_alpha(LexSpec(depth, numerator), ch);
  const double hi = t_alpha(LexSpec(depth, numerator + 1), ch);
  return mid - 0.5 * (lo + hi);
}

double takagi(const LexSpec& p, int terms) {
  const int m = p.depth();
  const std::uint64_t den = std::uint64_t{1} << m;
  double acc = 0.0;
  for (int j = 0; j < std::min(terms, m); ++j) {
    const std::uint64_t r = (p.numerator() << j) & (den - 1);
    const std::uint64_t dist = std::min(r, den - r);
    acc += std::ldexp(static_cast<double>(dist), -m - j);
  }
  return acc;
}

double takagi(const LexSpec& p) { return takagi(p, p.depth()); }

std::uint64_t takagi_scaled(int n, std::uint64_t k) {
  if (n < 0 || n > 40) throw std::out_of_range("takagi_scaled supports 0 <= n <= 40");
  const std::uint64_t den = std::uint64_t{1} << n;
  if (k > den) throw std::out_of_range("k exceeds 2^n");
  std::uint64_t acc = 0;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t r = (k << j) & (den - 1);
    acc += std::min(r, den - r) >> j;
  }
  return acc;
}

double takagi_limit_gap(const LexSpec& spec, ChannelParam ch, bool* outside_regime) {
  if (outside_regime) *outside_regime = ch.alpha() > kTakagiRegimeAlpha;
  return std::abs(t_alpha(spec, ch) / binary_entropy(ch.alpha()) - takagi(spec.reduced()));
}

void write_curve_csv(std::ostream& out, int depth, ChannelParam ch) {
  if (depth < 0 || depth > kMaxTalphaDepth) throw std::out_of_range("curve depth out of range");
  const double h = binary_entropy(ch.alpha());
  out << "p,t_alpha,f_times_H\n";
  for (std::uint64_t k = 0; k <= (std::uint64_t{1} << depth); ++k) {
    const LexSpec spec(depth, k);
    const double p = spec.probability();
    out << format_g17(p) << ',' << format_g17(t_alpha(spec, ch)) << ',' << format_g17(entropy_f(p) * h) << '\n';
  }
}

}  // namespace boolinfo
