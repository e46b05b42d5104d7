#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <vector>

#include "boolinfo/core.hpp"

namespace boolinfo {

/// Default arity cap for enumerating S_n.
inline constexpr int kMaxEnumerationArity = 7;

/// Sorted set of distinct 1-based coordinates i_1 < ... < i_k.
class CoordSet {
 public:
  CoordSet(std::initializer_list<int> indices);
  explicit CoordSet(std::vector<int> indices);

  std::size_t size() const noexcept { return indices_.size(); }
  int operator[](std::size_t j) const { return indices_[j]; }
  auto begin() const noexcept { return indices_.begin(); }
  auto end() const noexcept { return indices_.end(); }
  int max_index() const noexcept { return indices_.empty() ? 0 : indices_.back(); }

  /// Union of coord_bit(n, i) over the set.
  Point mask(int n) const;

  /// Point of Omega_n carrying z (a |I|-bit string, i_1 most significant) on I
  /// and zeros elsewhere.
  Point scatter(int n, Point z) const;

  friend bool operator==(const CoordSet&, const CoordSet&) = default;

 private:
  std::vector<int> indices_;
};

/// All k-element coordinate sets of {1..n} in lexicographic order.
std::vector<CoordSet> coord_subsets(int n, int k);

/// Order on Omega_n generated by lowering a 1 to 0 and by moving a 1 from
/// coordinate i to a zero coordinate j > i. Both moves decrease the integer
/// value of a point, so increasing integer order is a linear extension.
struct DominancePoset {
  int n = 0;
  /// covers[x]: the points reachable from x by one generator move.
  std::vector<std::vector<Point>> covers;

  static DominancePoset build(int n);
  bool is_downset(const TruthTable& b) const;
};

/// The I-section of B at x: { z in Omega_|I| : x with z written on I is in B }.
/// x must be zero on I.
TruthTable section(const TruthTable& b, const CoordSet& coords, Point x);

/// C_I(B): every I-section replaced by the lex initial segment of equal size.
TruthTable compress(const TruthTable& b, const CoordSet& coords);

bool is_compressed(const TruthTable& b, const CoordSet& coords);

/// B is I-compressed for every I with |I| <= 2 (membership in S_n).
bool in_compressed_family(const TruthTable& b);

/// Applies 1- and 2-compressions until nothing moves. Each pass runs the
/// singleton compressions to convergence, then the pairs (i, j) in
/// lexicographic order; passes repeat until one changes nothing.
TruthTable two_compress_fixpoint(const TruthTable& b);

/// Every member of S_n (the downsets of DominancePoset(n)) exactly once,
/// grouped by |B| ascending and, within a group, in discovery order.
std::vector<TruthTable> enumerate_sn(int n, int max_arity = kMaxEnumerationArity);

/// Streaming form of enumerate_sn.
void for_each_sn(int n, const std::function<void(const TruthTable&)>& emit,
                 int max_arity = kMaxEnumerationArity);

struct TripleCounterexample {
  TruthTable table;
  CoordSet coords;
  /// cond_entropy(compress(table, coords)) - cond_entropy(table) > 0
  double delta;
};

/// Exhaustive: literal for n <= 4, SectionReduced for n = 5.
enum class SearchMode { Exhaustive, SectionReduced, Random };

struct TripleSearchOptions {
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1u << 20;
  double margin = 1e-10;
};

/// Largest arity for exhaustive triple-compression search.
inline constexpr int kMaxExhaustiveTripleArity = 5;
/// Up to this arity the exhaustive search visits every one of the 2^(2^n) tables.
inline constexpr int kMaxLiteralTripleArity = 4;

/// Looks for B and |I| = 3 where I-compression raises H(b(X^n)|Y^n) by more
/// than `margin`, stopping at the first hit. Lex tables are skipped.
///
/// Exhaustive mode for n <= 4 walks every B in increasing integer order of its
/// bit-vector, then I lexicographically. For n = 5 (or on request via
/// SearchMode::SectionReduced) it walks, for each I, the
/// tables whose I-sections are all members of S_3; 1- and 2-compressions
/// inside I fix C_I(B) and cannot raise H(b|Y), so a counterexample exists
/// iff one exists in that family. Random mode draws `samples` tables from a
/// seeded generator.
std::optional<TripleCounterexample> find_triple_counterexample(int n, ChannelParam ch,
                                                              const TripleSearchOptions& options = {});

}  // namespace boolinfo
