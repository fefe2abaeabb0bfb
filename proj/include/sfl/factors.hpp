#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sfl/graph.hpp"

namespace sfl {

// max over S of i(G-S) - c|S|, with the lexicographically smallest witness
// (ties broken by smaller |S| first, then ascending vertex sequence).
struct DeficiencyResult {
  int value = 0;
  std::vector<int> witness_s;
  std::vector<int> isolated_t;  // isolated vertices of G - witness_s
  int c = 1;
};

DeficiencyResult max_deficiency(const Graph& g, int c);  // n <= 24

// Value-only scan, same maximum, no witness bookkeeping.
int max_deficiency_value(const Graph& g, int c);

// 2 mu_f(G); always an integer.
struct FractionalMatchingNumber {
  int doubled = 0;
  double value() const { return doubled / 2.0; }
  bool operator==(const FractionalMatchingNumber&) const = default;
};

// Berge-Tutte deficiency formula for n <= 24, bipartite double cover matching
// beyond; the two agree wherever both apply.
FractionalMatchingNumber fractional_matching_number(const Graph& g);

// Independent oracle: maximizes half-integral edge weights directly, n <= 10.
FractionalMatchingNumber brute_force_mu_f(const Graph& g);

struct BipartiteMatching {
  int size = 0;
  std::vector<int> match_left;  // right endpoint per left vertex, -1 if free
};

// Hopcroft-Karp (repeated shortest augmenting path phases).
BipartiteMatching bipartite_max_matching(int left_n, int right_n,
                                         const std::vector<std::pair<int, int>>& edges);

// Two copies v', v'' of each vertex; uv becomes u'v'' and v'u''. Its maximum
// matching size equals 2 mu_f(G).
BipartiteMatching double_cover_matching(const Graph& g);

struct FactorComponent {
  enum class Type { edge, cycle, star };
  Type type;
  // edge: {u, v}; cycle: vertices in cyclic order; star: center first.
  std::vector<int> vertices;
};

enum class FactorKind { star_factor, k2ck_factor };

struct FactorCertificate {
  FactorKind kind;
  int k = 0;
  bool exists = false;
  std::optional<std::vector<FactorComponent>> components;  // present on yes, n <= 12
  std::optional<std::vector<int>> refutation;              // witness S on no
};

// Exhaustive constructive searches, independent of the deficiency criterion
// (n <= 12). Decompositions minimize the component count; ties resolve by a
// fixed transition order.
std::optional<std::vector<FactorComponent>> find_k2_cycles_factor(const Graph& g);
std::optional<std::vector<FactorComponent>> find_star_factor(const Graph& g, int k);

// Criterion i(G-S) <= |S| (components K_2 and cycles), k >= 3.
FactorCertificate has_k2_ck_factor(const Graph& g, int k);
// Criterion i(G-S) <= k|S| (components K_{1,1}..K_{1,k}), k >= 2.
FactorCertificate has_star_factor(const Graph& g, int k);

// Components partition V(G), lie in G, and match the allowed family; or the
// refutation violates the cited inequality.
bool validate_certificate(const Graph& g, const FactorCertificate& cert);

}  // namespace sfl
