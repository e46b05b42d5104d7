#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace boolinfo {

/// Largest arity for which functions are stored as explicit truth tables.
inline constexpr int kMaxExplicitArity = 14;

/// Raised when a request exceeds a size cap (arity, depth) of an evaluator.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A point of Omega_n. Coordinate 1 is the most significant bit, so integer
/// order on points is lexicographic order on strings.
using Point = std::uint32_t;

/// Bit of `Point` holding coordinate i (1-based) of an n-bit string.
constexpr Point coord_bit(int n, int i) { return Point{1} << (n - i); }

/// Boolean function b: Omega_n -> {0,1}, stored as the indicator of its
/// zero-preimage B = b^{-1}(0). Immutable once built.
class TruthTable {
 public:
  /// The function b == 1 (empty B) on n inputs.
  explicit TruthTable(int n);

  static TruthTable from_words(int n, std::vector<std::uint64_t> words);
  static TruthTable from_points(int n, std::span<const Point> points);

  template <class Pred>
  static TruthTable from_predicate(int n, Pred&& in_zero_set) {
    TruthTable t(n);
    for (std::size_t x = 0; x < t.domain_size(); ++x)
      if (in_zero_set(static_cast<Point>(x))) t.words_[x >> 6] |= std::uint64_t{1} << (x & 63);
    return t;
  }

  int arity() const noexcept { return n_; }
  std::size_t domain_size() const noexcept { return std::size_t{1} << n_; }

  bool contains(Point x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1u; }

  /// |B|
  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Pr{b(X^n) = 0} for uniform X^n.
  double zero_probability() const noexcept {
    return static_cast<double>(count()) / static_cast<double>(domain_size());
  }

  std::vector<Point> points() const;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  /// Truth table of the negation: B replaced by its complement.
  TruthTable complement() const;

  /// Applies a coordinate permutation: coordinate i of the input becomes
  /// coordinate perm[i-1] of the output (perm is a 1-based permutation).
  TruthTable permuted(std::span<const int> perm) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// "n=<n>:<hex>" with the zero-set bit-vector read as an integer
/// (bit x set iff x in B), most significant hex digit first, zero padded to
/// ceil(2^n / 4) digits.
std::string to_hex(const TruthTable& table);
TruthTable from_hex(std::string_view text);

/// Dyadic rational k / 2^m naming the unique lex function with Pr{b=0} = p.
class LexSpec {
 public:
  static constexpr int kMaxDepth = 62;

  LexSpec(int depth, std::uint64_t numerator);

  int depth() const noexcept { return depth_; }
  std::uint64_t numerator() const noexcept { return numerator_; }
  double probability() const noexcept;

  /// Same p with trailing zero digits dropped (odd numerator or depth 0).
  LexSpec reduced() const noexcept;

  /// Same p written at a larger depth.
  LexSpec at_depth(int depth) const;

  friend bool operator==(const LexSpec& a, const LexSpec& b) noexcept {
    auto ra = a.reduced();
    auto rb = b.reduced();
    return ra.depth_ == rb.depth_ && ra.numerator_ == rb.numerator_;
  }

 private:
  int depth_;
  std::uint64_t numerator_;
};

/// Crossover probability of a memoryless BSC, 0 <= alpha <= 1/2.
class ChannelParam {
 public:
  explicit ChannelParam(double alpha);
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// f(x) = -x log2 x on [0,1], with f(0) = 0.
double entropy_f(double x);

/// h(p) = f(p) + f(1-p).
double binary_entropy(double p);

/// L_n(M): the first M points of Omega_n in lexicographic order.
TruthTable initial_segment(int n, std::size_t size);

bool is_lex(const TruthTable& table);

/// Explicit truth table of a lex spec; throws CapExceeded above
/// kMaxExplicitArity (use the implicit evaluator in talpha.hpp instead).
TruthTable lex_of(const LexSpec& spec);

}  // namespace boolinfo
