#include "boolinfo/compression.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "boolinfo/infomeasure.hpp"

namespace boolinfo {

namespace {

void require_within(const CoordSet& coords, int n) {
  if (coords.max_index() > n) throw std::out_of_range("coordinate set exceeds arity");
}

/// scatter(z) for every z in Omega_|I|.
std::vector<Point> section_offsets(const CoordSet& coords, int n) {
  const std::size_t k = coords.size();
  std::vector<Point> offsets(std::size_t{1} << k);
  for (Point z = 0; z < offsets.size(); ++z) offsets[z] = coords.scatter(n, z);
  return offsets;
}

}  // namespace

CoordSet::CoordSet(std::initializer_list<int> indices) : CoordSet(std::vector<int>(indices)) {}

CoordSet::CoordSet(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t j = 0; j < indices_.size(); ++j) {
    if (indices_[j] < 1) throw std::invalid_argument("coordinates are 1-based");
    if (j > 0 && indices_[j] <= indices_[j - 1]) throw std::invalid_argument("coordinates must be strictly increasing");
  }
}

Point CoordSet::mask(int n) const {
  Point m = 0;
  for (int i : indices_) m |= coord_bit(n, i);
  return m;
}

Point CoordSet::scatter(int n, Point z) const {
  const std::size_t k = indices_.size();
  Point x = 0;
  for (std::size_t j = 0; j < k; ++j)
    if ((z >> (k - 1 - j)) & 1u) x |= coord_bit(n, indices_[j]);
  return x;
}

std::vector<CoordSet> coord_subsets(int n, int k) {
  std::vector<CoordSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) pick[static_cast<std::size_t>(j)] = j + 1;
  while (true) {
    out.emplace_back(pick);
    int j = k - 1;
    while (j >= 0 && pick[static_cast<std::size_t>(j)] == n - k + j + 1) --j;
    if (j < 0) break;
    ++pick[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

DominancePoset DominancePoset::build(int n) {
  if (n < 0 || n > kMaxExplicitArity) throw CapExceeded("dominance poset arity out of range");
  DominancePoset poset{n, std::vector<std::vector<Point>>(std::size_t{1} << n)};
  for (Point x = 0; x < poset.covers.size(); ++x) {
    auto& c = poset.covers[x];
    for (int i = 1; i <= n; ++i) {
      const Point bi = coord_bit(n, i);
      if (!(x & bi)) continue;
      c.push_back(x ^ bi);
      for (int j = i + 1; j <= n; ++j) {
        const Point bj = coord_bit(n, j);
        if (!(x & bj)) c.push_back((x ^ bi) | bj);
      }
    }
    std::sort(c.begin(), c.end());
  }
  return poset;
}

bool DominancePoset::is_downset(const TruthTable& b) const {
  if (b.arity() != n) throw std::invalid_argument("arity mismatch");
  for (Point x : b.points())
    for (Point y : covers[x])
      if (!b.contains(y)) return false;
  return true;
}

TruthTable section(const TruthTable& b, const CoordSet& coords, Point x) {
  const int n = b.arity();
  require_within(coords, n);
  if (coords.size() == 0) throw std::invalid_argument("section needs a nonempty coordinate set");
  if (x >= b.domain_size()) throw std::out_of_range("point outside Omega_n");
  if (x & coords.mask(n)) throw std::invalid_argument("section base point must be zero on I");
  const auto k = static_cast<int>(coords.size());
  return TruthTable::from_predicate(k, [&](Point z) { return b.contains(x | coords.scatter(n, z)); });
}

TruthTable compress(const TruthTable& b, const CoordSet& coords) {
  const int n = b.arity();
  require_within(coords, n);
  if (coords.size() == 0) return b;
  const Point mask = coords.mask(n);
  const auto offsets = section_offsets(coords, n);

  std::vector<Point> out;
  out.reserve(b.count());
  for (Point x = 0; x < b.domain_size(); ++x) {
    if (x & mask) continue;
    std::size_t size = 0;
    for (Point o : offsets) size += b.contains(x | o);
    for (std::size_t z = 0; z < size; ++z) out.push_back(x | offsets[z]);
  }
  return TruthTable::from_points(n, out);
}

bool is_compressed(const TruthTable& b, const CoordSet& coords) { return compress(b, coords) == b; }

bool in_compressed_family(const TruthTable& b) {
  const int n = b.arity();
  for (int k = 1; k <= std::min(n, 2); ++k)
    for (const auto& coords : coord_subsets(n, k))
      if (!is_compressed(b, coords)) return false;
  return true;
}

TruthTable two_compress_fixpoint(const TruthTable& b) {
  const int n = b.arity();
  const auto singles = coord_subsets(n, 1);
  const auto pairs = coord_subsets(n, 2);
  TruthTable current = b;
  bool changed = true;
  while (changed) {
    changed = false;
    bool singles_moved = true;
    while (singles_moved) {
      singles_moved = false;
      for (const auto& c : singles) {
        auto next = compress(current, c);
        if (!(next == current)) {
          current = std::move(next);
          singles_moved = changed = true;
        }
      }
    }
    for (const auto& c : pairs) {
      auto next = compress(current, c);
      if (!(next == current)) {
        current = std::move(next);
        changed = true;
      }
    }
  }
  return current;
}

void for_each_sn(int n, const std::function<void(const TruthTable&)>& emit, int max_arity) {
  if (n < 0) throw std::invalid_argument("arity must be non-negative");
  if (n > max_arity || n > kMaxExplicitArity)
    throw CapExceeded("S_n enumeration capped at n <= " + std::to_string(max_arity));

  const auto poset = DominancePoset::build(n);
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint64_t> words((size + 63) / 64, 0);
  std::vector<std::vector<std::uint64_t>> found;

  auto has = [&](Point y) { return (words[y >> 6] >> (y & 63)) & 1u; };

  // Include/exclude over points in increasing integer order. A point may be
  // included only when all of its covers already are, so every leaf is a
  // distinct downset and no branch dead-ends.
  auto visit = [&](auto&& self, Point x) -> void {
    if (x == size) {
      found.push_back(words);
      return;
    }
    self(self, x + 1);
    const auto& cov = poset.covers[x];
    if (std::all_of(cov.begin(), cov.end(), has)) {
      words[x >> 6] |= std::uint64_t{1} << (x & 63);
      self(self, x + 1);
      words[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    }
  };
  visit(visit, 0);

  std::vector<TruthTable> tables;
  tables.reserve(found.size());
  for (auto& w : found) tables.push_back(TruthTable::from_words(n, std::move(w)));
  std::stable_sort(tables.begin(), tables.end(),
                   [](const TruthTable& a, const TruthTable& b) { return a.count() < b.count(); });
  for (const auto& t : tables) emit(t);
}

std::vector<TruthTable> enumerate_sn(int n, int max_arity) {
  std::vector<TruthTable> out;
  for_each_sn(n, [&](const TruthTable& t) { out.push_back(t); }, max_arity);
  return out;
}

std::optional<TripleCounterexample> find_triple_counterexample(int n, ChannelParam ch,
                                                              const TripleSearchOptions& options) {
  if (n < 3) return std::nullopt;
  if (n > kMaxExplicitArity) throw CapExceeded("arity over explicit table cap");
  const auto triples = coord_subsets(n, 3);

  auto probe = [&](const TruthTable& b, const std::vector<CoordSet>& candidates) -> std::optional<TripleCounterexample> {
    if (is_lex(b)) return std::nullopt;
    const double base = cond_entropy(b, ch);
    for (const auto& coords : candidates) {
      auto compressed = compress(b, coords);
      if (compressed == b) continue;
      const double delta = cond_entropy(compressed, ch) - base;
      if (delta > options.margin) return TripleCounterexample{b, coords, delta};
    }
    return std::nullopt;
  };

  const std::size_t size = std::size_t{1} << n;
  if (options.mode != SearchMode::Random) {
    if (n > kMaxExhaustiveTripleArity)
      throw CapExceeded("exhaustive triple search limited to n <= " + std::to_string(kMaxExhaustiveTripleArity));
    if (options.mode == SearchMode::Exhaustive && n <= kMaxLiteralTripleArity) {
      const std::uint64_t limit = std::uint64_t{1} << size;
      for (std::uint64_t bits = 0; bits < limit; ++bits)
        if (auto hit = probe(TruthTable::from_words(n, {bits}), triples)) return hit;
      return std::nullopt;
    }

    // Section-reduced search. For a fixed I, compressions on J within I keep
    // every I-section's size, so they leave C_I(B) unchanged while never
    // raising H(b|Y). Any counterexample therefore has one whose I-sections
    // all lie in S_|I|, and walking those tables is complete.
    const auto section_family = enumerate_sn(3);
    for (const auto& coords : triples) {
      const Point mask = coords.mask(n);
      std::vector<Point> bases;
      for (Point x = 0; x < size; ++x)
        if (!(x & mask)) bases.push_back(x);
      std::vector<std::vector<Point>> offsets;
      for (const auto& s : section_family) {
        auto& o = offsets.emplace_back();
        for (Point z : s.points()) o.push_back(coords.scatter(n, z));
      }
      std::vector<std::size_t> choice(bases.size(), 0);
      const std::vector<CoordSet> only{coords};
      while (true) {
        std::vector<Point> pts;
        for (std::size_t j = 0; j < bases.size(); ++j)
          for (Point o : offsets[choice[j]]) pts.push_back(bases[j] | o);
        if (auto hit = probe(TruthTable::from_points(n, pts), only)) return hit;
        std::size_t j = bases.size();
        while (j > 0 && ++choice[j - 1] == offsets.size()) choice[--j] = 0;
        if (j == 0) break;
      }
    }
    return std::nullopt;
  }

  std::mt19937_64 rng(options.seed);
  const std::size_t words = (size + 63) / 64;
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    std::vector<std::uint64_t> w(words);
    for (auto& word : w) word = rng();
    if (size < 64) w[0] &= (std::uint64_t{1} << size) - 1;
    if (auto hit = probe(TruthTable::from_words(n, std::move(w)), triples)) return hit;
  }
  return std::nullopt;
}

}  // namespace boolinfo
