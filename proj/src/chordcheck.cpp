#include "boolinfo/chordcheck.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "boolinfo/parallel.hpp"
#include "boolinfo/talpha.hpp"

namespace boolinfo {

namespace {

void require_open_alpha(ChannelParam ch) {
  if (!(ch.alpha() > 0.0 && ch.alpha() < 0.5)) throw std::domain_error("chord checks require 0 < alpha < 1/2");
}

/// Numerators of a and b written over 2^depth, depth = max of both.
struct Aligned {
  std::uint64_t a;
  std::uint64_t b;
  int depth;
};

Aligned align(const Dyadic& x, const Dyadic& y) {
  const auto rx = x.reduced();
  const auto ry = y.reduced();
  const int d = std::max(rx.log2den, ry.log2den);
  return {rx.num << (d - rx.log2den), ry.num << (d - ry.log2den), d};
}

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// T_alpha memoized on reduced dyadics for one alpha.
class TalphaCache {
 public:
  explicit TalphaCache(ChannelParam ch) : ch_(ch) {}

  double operator()(const Dyadic& p) {
    const auto r = p.reduced();
    const auto key = std::make_pair(r.log2den, r.num);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
    const double v = t_alpha(r.spec(), ch_);
    values_.emplace(key, v);
    return v;
  }

 private:
  ChannelParam ch_;
  std::map<std::pair<int, std::uint64_t>, double> values_;
};

double nu_for(const Dyadic& a, const Dyadic& b, double h, TalphaCache& talpha) {
  return chord_deficit_min(a.value(), b.value(), talpha(a), talpha(b), h);
}

}  // namespace

double Dyadic::value() const noexcept { return std::ldexp(static_cast<double>(num), -log2den); }

Dyadic Dyadic::reduced() const noexcept {
  if (num == 0) return {0, 0};
  Dyadic r = *this;
  while (r.log2den > 0 && (r.num & 1u) == 0) {
    r.num >>= 1;
    --r.log2den;
  }
  return r;
}

bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
  const auto al = align(a, b);
  return al.a == al.b;
}

bool operator<(const Dyadic& a, const Dyadic& b) noexcept {
  const auto al = align(a, b);
  return al.a < al.b;
}

std::string to_string(CertificateStatus status) {
  return status == CertificateStatus::Verified ? "VERIFIED" : "INCONCLUSIVE";
}

double chord_deficit(double x, double a, double b, double ta, double tb, double h) {
  const double slope = (tb - ta) / (b - a);
  return slope * (x - a) + ta - entropy_f(x) * h;
}

double chord_deficit_min(double a, double b, double ta, double tb, double h) {
  const double slope = (tb - ta) / (b - a);
  const double stationary = std::exp2(-slope / h) / std::numbers::e;
  const double x = std::clamp(stationary, a, b);
  return chord_deficit(x, a, b, ta, tb, h);
}

double check_chord(const Dyadic& a, const Dyadic& b, ChannelParam ch, int depth_cap) {
  require_open_alpha(ch);
  const auto al = align(a, b);
  const std::uint64_t half = al.depth == 0 ? 0 : std::uint64_t{1} << (al.depth - 1);
  const std::uint64_t one = std::uint64_t{1} << al.depth;
  if (al.depth == 0 || al.a < half || al.b > one) throw std::domain_error("chord must lie within [1/2, 1]");
  if (al.a >= al.b) throw std::invalid_argument("chord needs a < b");
  // width = (b - a) / 2^depth must be >= 2^-depth_cap
  const int width_log2 = std::bit_width(al.b - al.a) - 1 - al.depth;
  if (width_log2 < -depth_cap) throw std::invalid_argument("chord narrower than 2^-depth_cap");

  TalphaCache talpha(ch);
  return nu_for(a, b, binary_entropy(ch.alpha()), talpha);
}

ChordCertificate test_inequality(ChannelParam ch, int depth_cap, double epsilon) {
  require_open_alpha(ch);
  if (depth_cap < 1) throw std::invalid_argument("depth_cap must be >= 1");

  ChordCertificate cert;
  cert.alpha = ch.alpha();
  cert.epsilon = epsilon;
  cert.depth_cap = depth_cap;
  cert.status = CertificateStatus::Verified;

  const double h = binary_entropy(ch.alpha());
  const int reachable = std::min(depth_cap, kMaxTalphaDepth);
  TalphaCache talpha(ch);

  // Left-to-right depth-first recursion, so accepted chords come out sorted.
  auto visit = [&](auto&& self, std::uint64_t k, int depth) -> void {
    if (cert.status != CertificateStatus::Verified) return;
    const Dyadic lo{k, depth};
    const Dyadic hi{k + 1, depth};
    Chord chord{lo, hi, nu_for(lo, hi, h, talpha), depth};
    cert.max_depth_reached = std::max(cert.max_depth_reached, depth);
    if (chord.nu >= -epsilon) {
      cert.chords.push_back(chord);
      return;
    }
    if (depth + 1 > reachable) {
      cert.status = CertificateStatus::Inconclusive;
      cert.failing = chord;
      return;
    }
    self(self, 2 * k, depth + 1);
    self(self, 2 * k + 1, depth + 1);
  };
  visit(visit, 1, 1);
  return cert;
}

std::vector<double> alpha_grid(double start, double end, double step) {
  std::vector<double> grid;
  if (!(step > 0.0)) throw std::invalid_argument("alpha step must be positive");
  for (std::size_t j = 0;; ++j) {
    const double a = start + static_cast<double>(j) * step;
    if (a > end + 1e-9 * step) break;
    grid.push_back(a);
  }
  return grid;
}

std::vector<ChordCertificate> sweep(double alpha_start, double alpha_end, double alpha_step, int depth_cap,
                                    double epsilon, int threads) {
  const auto grid = alpha_grid(alpha_start, alpha_end, alpha_step);
  for (double a : grid) require_open_alpha(ChannelParam(a));
  std::vector<ChordCertificate> out(grid.size());
  parallel_for(grid.size(), threads,
               [&](std::size_t j) { out[j] = test_inequality(ChannelParam(grid[j]), depth_cap, epsilon); });
  return out;
}

nlohmann::ordered_json to_json(const ChordCertificate& cert) {
  auto chord_json = [](const Chord& c) {
    return nlohmann::ordered_json{{"p_minus_num", c.p_minus.num}, {"p_minus_den_log2", c.p_minus.log2den},
                                  {"p_plus_num", c.p_plus.num},   {"p_plus_den_log2", c.p_plus.log2den},
                                  {"nu", c.nu},                   {"depth", c.depth}};
  };
  nlohmann::ordered_json j;
  j["alpha"] = cert.alpha;
  j["status"] = to_string(cert.status);
  j["epsilon"] = cert.epsilon;
  j["depth_cap"] = cert.depth_cap;
  j["max_depth_reached"] = cert.max_depth_reached;
  j["chords"] = nlohmann::ordered_json::array();
  for (const auto& c : cert.chords) j["chords"].push_back(chord_json(c));
  if (cert.failing) j["failing"] = chord_json(*cert.failing);
  return j;
}

void write_chords_csv(std::ostream& out, const ChordCertificate& cert) {
  out << "p_minus,p_plus,nu,depth\n";
  for (const auto& c : cert.chords)
    out << format_g17(c.p_minus.value()) << ',' << format_g17(c.p_plus.value()) << ',' << format_g17(c.nu) << ','
        << c.depth << '\n';
}

}  // namespace boolinfo
