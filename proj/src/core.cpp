#include "boolinfo/core.hpp"

#include <algorithm>
#include <cmath>

namespace boolinfo {

namespace {

std::size_t word_count(int n) { return ((std::size_t{1} << n) + 63) / 64; }

void check_arity(int n) {
  if (n < 0) throw std::invalid_argument("arity must be non-negative");
  if (n > kMaxExplicitArity)
    throw CapExceeded("arity " + std::to_string(n) + " exceeds explicit table cap " +
                      std::to_string(kMaxExplicitArity));
}

std::size_t hex_digits(int n) { return std::max<std::size_t>(1, ((std::size_t{1} << n) + 3) / 4); }

}  // namespace

TruthTable::TruthTable(int n) : n_(n) {
  check_arity(n);
  words_.assign(word_count(n), 0);
}

TruthTable TruthTable::from_words(int n, std::vector<std::uint64_t> words) {
  TruthTable t(n);
  if (words.size() != t.words_.size()) throw std::invalid_argument("word count does not match arity");
  if (t.domain_size() < 64) {
    const std::uint64_t mask = (std::uint64_t{1} << t.domain_size()) - 1;
    if (words[0] & ~mask) throw std::invalid_argument("bits set outside Omega_n");
  }
  t.words_ = std::move(words);
  return t;
}

TruthTable TruthTable::from_points(int n, std::span<const Point> points) {
  TruthTable t(n);
  for (Point x : points) {
    if (x >= t.domain_size()) throw std::out_of_range("point outside Omega_n");
    t.words_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
  return t;
}

std::vector<Point> TruthTable::points() const {
  std::vector<Point> out;
  out.reserve(count());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      out.push_back(static_cast<Point>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

TruthTable TruthTable::complement() const {
  TruthTable t(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) t.words_[w] = ~words_[w];
  if (domain_size() < 64) t.words_[0] &= (std::uint64_t{1} << domain_size()) - 1;
  return t;
}

TruthTable TruthTable::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size must equal arity");
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (int p : perm) {
    if (p < 1 || p > n_ || seen[static_cast<std::size_t>(p)]) throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(p)] = true;
  }
  TruthTable t(n_);
  for (Point x : points()) {
    Point y = 0;
    for (int i = 1; i <= n_; ++i)
      if (x & coord_bit(n_, i)) y |= coord_bit(n_, perm[static_cast<std::size_t>(i - 1)]);
    t.words_[y >> 6] |= std::uint64_t{1} << (y & 63);
  }
  return t;
}

std::string to_hex(const TruthTable& table) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = hex_digits(table.arity());
  std::string hex(digits, '0');
  // digit d (from the right) holds bits 4d..4d+3
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nibble = 0;
    for (unsigned b = 0; b < 4; ++b) {
      const std::size_t x = 4 * d + b;
      if (x < table.domain_size() && table.contains(static_cast<Point>(x))) nibble |= 1u << b;
    }
    hex[digits - 1 - d] = kDigits[nibble];
  }
  return "n=" + std::to_string(table.arity()) + ":" + hex;
}

TruthTable from_hex(std::string_view text) {
  if (text.substr(0, 2) != "n=") throw std::invalid_argument("truth table must start with 'n='");
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("truth table missing ':'");
  int n = 0;
  const auto arity_text = text.substr(2, colon - 2);
  if (arity_text.empty() || arity_text.size() > 3) throw std::invalid_argument("bad arity in truth table");
  for (char c : arity_text) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad arity in truth table");
    n = n * 10 + (c - '0');
  }
  check_arity(n);
  const auto hex = text.substr(colon + 1);
  const std::size_t digits = hex_digits(n);
  if (hex.size() != digits)
    throw std::invalid_argument("expected " + std::to_string(digits) + " hex digits for n=" + std::to_string(n));

  std::vector<Point> pts;
  const std::size_t size = std::size_t{1} << n;
  for (std::size_t d = 0; d < digits; ++d) {
    const char c = hex[digits - 1 - d];
    unsigned nibble;
    if (c >= '0' && c <= '9') nibble = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') nibble = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') nibble = static_cast<unsigned>(c - 'A' + 10);
    else throw std::invalid_argument("invalid hex digit in truth table");
    for (unsigned b = 0; b < 4; ++b) {
      if (!((nibble >> b) & 1u)) continue;
      const std::size_t x = 4 * d + b;
      if (x >= size) throw std::invalid_argument("hex sets bits outside Omega_n");
      pts.push_back(static_cast<Point>(x));
    }
  }
  return TruthTable::from_points(n, pts);
}

LexSpec::LexSpec(int depth, std::uint64_t numerator) : depth_(depth), numerator_(numerator) {
  if (depth < 0 || depth > kMaxDepth) throw std::invalid_argument("lex depth out of range");
  if (numerator > (std::uint64_t{1} << depth)) throw std::invalid_argument("lex numerator exceeds 2^depth");
}

double LexSpec::probability() const noexcept {
  return std::ldexp(static_cast<double>(numerator_), -depth_);
}

LexSpec LexSpec::reduced() const noexcept {
  LexSpec r = *this;
  if (r.numerator_ == 0) return LexSpec(0, 0);
  while (r.depth_ > 0 && (r.numerator_ & 1u) == 0) {
    r.numerator_ >>= 1;
    --r.depth_;
  }
  return r;
}

LexSpec LexSpec::at_depth(int depth) const {
  auto r = reduced();
  if (depth < r.depth_) throw std::invalid_argument("cannot write p at a smaller depth");
  return LexSpec(depth, r.numerator_ << (depth - r.depth_));
}

ChannelParam::ChannelParam(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) throw std::domain_error("crossover probability must lie in [0, 1/2]");
}

double entropy_f(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("entropy_f argument outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy argument outside [0,1]");
  return entropy_f(p) + entropy_f(1.0 - p);
}

TruthTable initial_segment(int n, std::size_t size) {
  TruthTable empty(n);
  if (size > empty.domain_size()) throw std::out_of_range("initial segment larger than Omega_n");
  std::vector<std::uint64_t> words(empty.words().size(), 0);
  for (std::size_t w = 0; w < words.size(); ++w) {
    const std::size_t lo = w * 64;
    if (size >= lo + 64) words[w] = ~std::uint64_t{0};
    else if (size > lo) words[w] = (std::uint64_t{1} << (size - lo)) - 1;
  }
  return TruthTable::from_words(n, std::move(words));
}

bool is_lex(const TruthTable& table) {
  return table == initial_segment(table.arity(), table.count());
}

TruthTable lex_of(const LexSpec& spec) {
  if (spec.depth() > kMaxExplicitArity)
    throw CapExceeded("lex depth " + std::to_string(spec.depth()) +
                      " exceeds explicit table cap; use the implicit t_alpha evaluator");
  return initial_segment(spec.depth(), static_cast<std::size_t>(spec.numerator()));
}

}  // namespace boolinfo
