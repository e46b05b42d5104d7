#include "boolinfo/infomeasure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace boolinfo {

namespace {

constexpr double kClampSlack = 1e-9;

double clamp_probability(double p) {
  if (p < -kClampSlack || p > 1.0 + kClampSlack)
    throw std::logic_error("posterior entry " + std::to_string(p) + " is outside [0,1]");
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

PosteriorField posterior_transform(const TruthTable& b, ChannelParam ch) {
  const int n = b.arity();
  const std::size_t size = b.domain_size();
  PosteriorField out{n, std::vector<double>(size, 0.0)};
  auto& v = out.values;
  for (Point x = 0; x < size; ++x) v[x] = b.contains(x) ? 1.0 : 0.0;

  // Stage for one coordinate: (a, c) -> ((1-alpha) a + alpha c, alpha a + (1-alpha) c),
  // written as a sum/difference butterfly with the difference scaled by 1 - 2 alpha.
  const double rho = 1.0 - 2.0 * ch.alpha();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t base = 0; base < size; base += 2 * half) {
      for (std::size_t j = base; j < base + half; ++j) {
        const double s = v[j] + v[j + half];
        const double d = rho * (v[j] - v[j + half]);
        v[j] = 0.5 * (s + d);
        v[j + half] = 0.5 * (s - d);
      }
    }
  }
  return out;
}

PosteriorField posterior_naive(const TruthTable& b, ChannelParam ch) {
  const int n = b.arity();
  if (n > kMaxNaiveArity)
    throw CapExceeded("naive posterior limited to n <= " + std::to_string(kMaxNaiveArity));
  const double a = ch.alpha();
  std::vector<double> weight(static_cast<std::size_t>(n) + 1);
  for (int d = 0; d <= n; ++d) weight[static_cast<std::size_t>(d)] = std::pow(a, d) * std::pow(1.0 - a, n - d);

  const auto members = b.points();
  PosteriorField out{n, std::vector<double>(b.domain_size(), 0.0)};
  for (Point y = 0; y < b.domain_size(); ++y) {
    double acc = 0.0;
    for (Point x : members) acc += weight[static_cast<std::size_t>(std::popcount(x ^ y))];
    out.values[y] = acc;
  }
  return out;
}

double cond_entropy(const PosteriorField& posterior) {
  double acc = 0.0;
  for (double raw : posterior.values) acc += binary_entropy(clamp_probability(raw));
  return acc / static_cast<double>(posterior.values.size());
}

double cond_entropy(const TruthTable& b, ChannelParam ch) { return cond_entropy(posterior_transform(b, ch)); }

double mutual_info(const TruthTable& b, ChannelParam ch) {
  return binary_entropy(b.zero_probability()) - cond_entropy(b, ch);
}

double mutual_info_single(const TruthTable& b, ChannelParam ch, int coordinate) {
  const int n = b.arity();
  if (coordinate < 1 || coordinate > n) throw std::out_of_range("coordinate outside 1..n");
  const Point bit = coord_bit(n, coordinate);
  double in_zero = 0.0;  // |B ∩ {x_i = 0}|
  double in_one = 0.0;   // |B ∩ {x_i = 1}|
  for (Point x : b.points()) (x & bit ? in_one : in_zero) += 1.0;

  const double a = ch.alpha();
  const double half = static_cast<double>(b.domain_size()) / 2.0;
  const double q0 = clamp_probability(((1.0 - a) * in_zero + a * in_one) / half);
  const double q1 = clamp_probability((a * in_zero + (1.0 - a) * in_one) / half);
  return binary_entropy(b.zero_probability()) - 0.5 * (binary_entropy(q0) + binary_entropy(q1));
}

double sum_single_mi(const TruthTable& b, ChannelParam ch) {
  double acc = 0.0;
  for (int i = 1; i <= b.arity(); ++i) acc += mutual_info_single(b, ch, i);
  return acc;
}

std::uint64_t edge_boundary(const TruthTable& b) {
  const int n = b.arity();
  std::uint64_t edges = 0;
  for (Point x : b.points())
    for (int i = 1; i <= n; ++i)
      if (!b.contains(x ^ coord_bit(n, i))) ++edges;
  return edges;
}

}  // namespace boolinfo
