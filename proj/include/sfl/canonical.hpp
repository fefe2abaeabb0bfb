#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sfl/graph.hpp"

namespace sfl {

// Lexicographically minimal upper-triangle bitstring over all n! relabelings.
// Equal forms iff isomorphic; only graphs of equal order compare.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;  // first pair (0,1) is the most significant bit

  auto operator<=>(const CanonicalForm&) const = default;
  std::string to_string() const;
};

// n <= 8 (full permutation scan; the permutation tables are cached).
CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// Every labeled graph on n vertices with minimum degree exactly min_degree,
// n <= 8. With dedup, one representative per isomorphism class (the first
// encountered in edge-mask order).
void enumerate_graphs(int n, int min_degree, bool dedup,
                      const std::function<void(const Graph&)>& sink);

long count_graphs(int n, int min_degree, bool dedup);

}  // namespace sfl
