#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace sfl {

// Hard cap: adjacency rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

// Undirected simple graph on labeled vertices 0..n-1.
// Row v is a bitset; bit u of row v means uv is an edge.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  std::uint64_t neighbors(int v) const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
  int edge_count() const;

  bool operator==(const Graph&) const = default;

  // Symmetry and loop-freeness; cheap enough to assert at mutation boundaries.
  bool invariants_hold() const;

  // Packs the upper triangle (row-major: (0,1),(0,2),...,(n-2,n-1)) into a
  // word; only valid while n(n-1)/2 <= 64, i.e. n <= 11.
  static Graph from_edge_mask(int n, std::uint64_t mask);
  std::uint64_t to_edge_mask() const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;

  void check_vertex(int v) const;
};

// Index of pair (i,j), i<j, in the row-major upper-triangle ordering.
int edge_index(int n, int i, int j);
int pair_count(int n);

struct GraphStats {
  int n = 0;
  int m = 0;
  int min_degree = 0;
  int max_degree = 0;
  int isolated_count = 0;
  int component_count = 0;
};

GraphStats stats(const Graph& g);

Graph complete(int n);
Graph cycle(int n);  // n >= 3
Graph star(int n);   // n >= 2, center is vertex 0
Graph empty_graph(int n);

// Vertex labels of g2 are shifted by g1.order().
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);

struct DeleteResult {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for deleted vertices
};

DeleteResult induced_delete(const Graph& g, const std::vector<int>& remove);

// New graph with vertex i of g relabeled to perm[i].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace sfl
