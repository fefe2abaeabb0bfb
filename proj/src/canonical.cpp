#include "sfl/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace sfl {

namespace {

constexpr int kCanonMax = 8;

using Perm = std::array<std::uint8_t, kCanonMax>;

const std::vector<Perm>& permutations_of(int n) {
  static const auto tables = [] {
    std::array<std::vector<Perm>, kCanonMax + 1> all;
    for (int n = 0; n <= kCanonMax; ++n) {
      Perm p{};
      std::iota(p.begin(), p.begin() + n, std::uint8_t{0});
      do {
        all[static_cast<std::size_t>(n)].push_back(p);
      } while (std::next_permutation(p.begin(), p.begin() + n));
    }
    return all;
  }();
  return tables[static_cast<std::size_t>(n)];
}

}  // namespace

std::string CanonicalForm::to_string() const {
  const int bits_total = pair_count(n);
  std::string s;
  s.reserve(static_cast<std::size_t>(bits_total));
  for (int t = 0; t < bits_total; ++t) {
    s.push_back(((bits >> (bits_total - 1 - t)) & 1u) ? '1' : '0');
  }
  return s;
}

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonMax) {
    throw std::invalid_argument("canonical_form supports n <= 8, got " + std::to_string(n));
  }
  const int bits_total = pair_count(n);

  // Edges once, as index pairs.
  std::array<std::pair<int, int>, 28> edges{};
  int m = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) edges[static_cast<std::size_t>(m++)] = {i, j};
    }
  }

  std::uint64_t best = ~std::uint64_t{0};
  for (const Perm& p : permutations_of(n)) {
    std::uint64_t bits = 0;
    for (int e = 0; e < m; ++e) {
      int a = p[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].first)];
      int b = p[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].second)];
      if (a > b) std::swap(a, b);
      bits |= std::uint64_t{1} << (bits_total - 1 - edge_index(n, a, b));
    }
    best = std::min(best, bits);
  }
  if (m == 0) best = 0;
  return CanonicalForm{n, best};
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

void enumerate_graphs(int n, int min_degree, bool dedup,
                      const std::function<void(const Graph&)>& sink) {
  if (n < 0 || n > kCanonMax) {
    throw std::invalid_argument("exhaustive enumeration supports n <= 8, got " +
                                std::to_string(n));
  }
  if (n == 0) {
    if (min_degree == 0) sink(Graph(0));
    return;
  }
  const int bits_total = pair_count(n);
  std::unordered_set<std::uint64_t> seen;
  std::array<std::uint64_t, kCanonMax> rows{};
  std::array<std::pair<int, int>, 28> pairs{};
  for (int i = 0, t = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++t) pairs[static_cast<std::size_t>(t)] = {i, j};
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits_total); ++mask) {
    rows.fill(0);
    std::uint64_t bits = mask;
    while (bits) {
      const int t = std::countr_zero(bits);
      bits &= bits - 1;
      const auto [i, j] = pairs[static_cast<std::size_t>(t)];
      rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
      rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
    }
    int delta = n;
    for (int v = 0; v < n; ++v) delta = std::min(delta, std::popcount(rows[static_cast<std::size_t>(v)]));
    if (delta != min_degree) continue;
    const Graph g = Graph::from_edge_mask(n, mask);
    if (dedup) {
      if (!seen.insert(canonical_form(g).bits).second) continue;
    }
    sink(g);
  }
}

long count_graphs(int n, int min_degree, bool dedup) {
  long count = 0;
  enumerate_graphs(n, min_degree, dedup, [&](const Graph&) { ++count; });
  return count;
}

}  // namespace sfl
