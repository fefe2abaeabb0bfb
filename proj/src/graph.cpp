#include "sfl/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfl {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(n));
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(n_));
  }
}

std::uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

int Graph::edge_count() const {
  int total = 0;
  for (const auto row : adj_) total += std::popcount(row);
  return total / 2;
}

bool Graph::invariants_hold() const {
  for (int v = 0; v < n_; ++v) {
    const auto row = adj_[static_cast<std::size_t>(v)];
    if ((row >> v) & 1u) return false;
    if (n_ < kMaxVertices && (row >> n_) != 0) return false;
    std::uint64_t bits = row;
    while (bits) {
      const int u = std::countr_zero(bits);
      bits &= bits - 1;
      if (!((adj_[static_cast<std::size_t>(u)] >> v) & 1u)) return false;
    }
  }
  return true;
}

int edge_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n || i == j) throw std::invalid_argument("bad vertex pair");
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

int pair_count(int n) { return n * (n - 1) / 2; }

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
  if (pair_count(n) > 64) throw std::invalid_argument("edge mask only supports n <= 11");
  Graph g(n);
  int idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++idx) {
      if ((mask >> idx) & 1u) g.add_edge(i, j);
    }
  }
  return g;
}

std::uint64_t Graph::to_edge_mask() const {
  if (pair_count(n_) > 64) throw std::invalid_argument("edge mask only supports n <= 11");
  std::uint64_t mask = 0;
  int idx = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++idx) {
      if (has_edge(i, j)) mask |= std::uint64_t{1} << idx;
    }
  }
  return mask;
}

GraphStats stats(const Graph& g) {
  GraphStats st;
  st.n = g.order();
  if (st.n == 0) return st;
  int deg_sum = 0;
  st.min_degree = kMaxVertices + 1;
  for (int v = 0; v < st.n; ++v) {
    const int d = g.degree(v);
    deg_sum += d;
    st.min_degree = std::min(st.min_degree, d);
    st.max_degree = std::max(st.max_degree, d);
    if (d == 0) ++st.isolated_count;
  }
  st.m = deg_sum / 2;

  std::uint64_t unseen = (st.n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << st.n) - 1;
  while (unseen) {
    ++st.component_count;
    std::uint64_t frontier = unseen & (~unseen + 1);  // lowest unseen vertex
    unseen &= ~frontier;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t bits = frontier;
      while (bits) {
        const int v = std::countr_zero(bits);
        bits &= bits - 1;
        next |= g.neighbors(v);
      }
      frontier = next & unseen;
      unseen &= ~frontier;
    }
  }
  return st;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph star(int n) {
  if (n < 2) throw std::invalid_argument("star requires n >= 2");
  Graph g(n);
  for (int leaf = 1; leaf < n; ++leaf) g.add_edge(0, leaf);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  Graph g(n1 + n2);
  for (int v = 0; v < n1; ++v) {
    for (int u = v + 1; u < n1; ++u) {
      if (g1.has_edge(v, u)) g.add_edge(v, u);
    }
  }
  for (int v = 0; v < n2; ++v) {
    for (int u = v + 1; u < n2; ++u) {
      if (g2.has_edge(v, u)) g.add_edge(n1 + v, n1 + u);
    }
  }
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  for (int v = 0; v < g1.order(); ++v) {
    for (int u = 0; u < g2.order(); ++u) g.add_edge(v, g1.order() + u);
  }
  return g;
}

DeleteResult induced_delete(const Graph& g, const std::vector<int>& remove) {
  const int n = g.order();
  std::vector<bool> gone(static_cast<std::size_t>(n), false);
  for (const int v : remove) {
    if (v < 0 || v >= n) {
      throw std::out_of_range("delete set contains vertex " + std::to_string(v) +
                              " outside order " + std::to_string(n));
    }
    gone[static_cast<std::size_t>(v)] = true;
  }
  DeleteResult result;
  result.old_to_new.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (!gone[static_cast<std::size_t>(v)]) result.old_to_new[static_cast<std::size_t>(v)] = next++;
  }
  result.graph = Graph(next);
  for (int v = 0; v < n; ++v) {
    if (gone[static_cast<std::size_t>(v)]) continue;
    for (int u = v + 1; u < n; ++u) {
      if (gone[static_cast<std::size_t>(u)]) continue;
      if (g.has_edge(v, u)) {
        result.graph.add_edge(result.old_to_new[static_cast<std::size_t>(v)],
                              result.old_to_new[static_cast<std::size_t>(u)]);
      }
    }
  }
  return result;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (const int p : perm) {
    if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("not a permutation");
    }
    hit[static_cast<std::size_t>(p)] = true;
  }
  Graph h(n);
  for (int v = 0; v < n; ++v) {
    for (int u = v + 1; u < n; ++u) {
      if (g.has_edge(v, u)) {
        h.add_edge(perm[static_cast<std::size_t>(v)], perm[static_cast<std::size_t>(u)]);
      }
    }
  }
  return h;
}

}  // namespace sfl
