#include "sfl/factors.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>

namespace sfl {

namespace {

constexpr int kDeficiencyMax = 24;
constexpr int kOracleMax = 10;
constexpr int kConstructMax = 12;

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Ascending-sequence lexicographic order, sizes assumed equal.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

int isolated_after_removal(const Graph& g, std::uint64_t s_mask) {
  int iso = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((s_mask >> v) & 1u) continue;
    if ((g.neighbors(v) & ~s_mask) == 0) ++iso;
  }
  return iso;
}

}  // namespace

DeficiencyResult max_deficiency(const Graph& g, int c) {
  const int n = g.order();
  if (c < 1) throw std::invalid_argument("deficiency weight c must be a positive integer");
  if (n > kDeficiencyMax) {
    throw std::invalid_argument("max_deficiency supports n <= 24, got " + std::to_string(n));
  }
  int best = -(c * n) - 1;
  std::uint64_t best_mask = 0;
  int best_size = n + 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    const int size = std::popcount(s);
    const int value = isolated_after_removal(g, s) - c * size;
    if (value > best || (value == best && (size < best_size ||
                                           (size == best_size && lex_less(s, best_mask))))) {
      best = value;
      best_mask = s;
      best_size = size;
    }
  }
  DeficiencyResult res;
  res.value = best;
  res.c = c;
  res.witness_s = mask_to_vertices(best_mask);
  for (int v = 0; v < n; ++v) {
    if ((best_mask >> v) & 1u) continue;
    if ((g.neighbors(v) & ~best_mask) == 0) res.isolated_t.push_back(v);
  }
  return res;
}

int max_deficiency_value(const Graph& g, int c) {
  const int n = g.order();
  if (c < 1) throw std::invalid_argument("deficiency weight c must be a positive integer");
  if (n > kDeficiencyMax) {
    throw std::invalid_argument("max_deficiency supports n <= 24, got " + std::to_string(n));
  }
  int best = -(c * n) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    const int value = isolated_after_removal(g, s) - c * std::popcount(s);
    best = std::max(best, value);
  }
  return best;
}

FractionalMatchingNumber fractional_matching_number(const Graph& g) {
  const int n = g.order();
  if (n <= kDeficiencyMax) {
    return FractionalMatchingNumber{n - max_deficiency_value(g, 1)};
  }
  return FractionalMatchingNumber{double_cover_matching(g).size};
}

FractionalMatchingNumber brute_force_mu_f(const Graph& g) {
  const int n = g.order();
  if (n > kOracleMax) {
    throw std::invalid_argument("brute_force_mu_f supports n <= 10, got " + std::to_string(n));
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  const int m = static_cast<int>(edges.size());

  // Start from a greedy matching so the bound prunes early.
  std::array<int, kOracleMax> cap{};
  cap.fill(2);
  int best = 0;
  {
    std::array<bool, kOracleMax> used{};
    for (const auto& [u, v] : edges) {
      if (!used[static_cast<std::size_t>(u)] && !used[static_cast<std::size_t>(v)]) {
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
        best += 2;
      }
    }
  }

  // Doubled weights w(e) in {0,1,2}; each unit consumes one capacity unit at
  // both endpoints, so cap_sum/2 bounds everything still achievable.
  const auto rec = [&](const auto& self, int e, int acc, int cap_sum) -> void {
    best = std::max(best, acc);
    if (e == m) return;
    if (acc + std::min(2 * (m - e), cap_sum / 2) <= best) return;
    const auto [u, v] = edges[static_cast<std::size_t>(e)];
    const int top = std::min({2, cap[static_cast<std::size_t>(u)], cap[static_cast<std::size_t>(v)]});
    for (int w = top; w >= 0; --w) {
      cap[static_cast<std::size_t>(u)] -= w;
      cap[static_cast<std::size_t>(v)] -= w;
      self(self, e + 1, acc + w, cap_sum - 2 * w);
      cap[static_cast<std::size_t>(u)] += w;
      cap[static_cast<std::size_t>(v)] += w;
    }
  };
  rec(rec, 0, 0, 2 * n);
  return FractionalMatchingNumber{best};
}

BipartiteMatching bipartite_max_matching(int left_n, int right_n,
                                         const std::vector<std::pair<int, int>>& edges) {
  if (left_n < 0 || right_n < 0) throw std::invalid_argument("negative bipartite side size");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(left_n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= left_n || v < 0 || v >= right_n) {
      throw std::invalid_argument("bipartite edge index out of range");
    }
    adj[static_cast<std::size_t>(u)].push_back(v);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("duplicate bipartite edge");
    }
  }

  constexpr int kInf = 1 << 29;
  std::vector<int> match_l(static_cast<std::size_t>(left_n), -1);
  std::vector<int> match_r(static_cast<std::size_t>(right_n), -1);
  std::vector<int> dist(static_cast<std::size_t>(left_n), 0);

  const auto bfs = [&]() -> bool {
    std::queue<int> q;
    for (int u = 0; u < left_n; ++u) {
      if (match_l[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = 0;
        q.push(u);
      } else {
        dist[static_cast<std::size_t>(u)] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const int v : adj[static_cast<std::size_t>(u)]) {
        const int w = match_r[static_cast<std::size_t>(v)];
        if (w < 0) {
          found = true;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };
  const auto dfs = [&](const auto& self, int u) -> bool {
    for (const int v : adj[static_cast<std::size_t>(u)]) {
      const int w = match_r[static_cast<std::size_t>(v)];
      if (w < 0 || (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(u)] + 1 &&
                    self(self, w))) {
        match_l[static_cast<std::size_t>(u)] = v;
        match_r[static_cast<std::size_t>(v)] = u;
        return true;
      }
    }
    dist[static_cast<std::size_t>(u)] = kInf;
    return false;
  };

  BipartiteMatching result;
  while (bfs()) {
    for (int u = 0; u < left_n; ++u) {
      if (match_l[static_cast<std::size_t>(u)] < 0 && dfs(dfs, u)) ++result.size;
    }
  }
  result.match_left = std::move(match_l);
  return result;
}

BipartiteMatching double_cover_matching(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) {
        edges.emplace_back(u, v);
        edges.emplace_back(v, u);
      }
    }
  }
  return bipartite_max_matching(g.order(), g.order(), edges);
}

namespace {

constexpr std::uint8_t kImpossible = 255;

// Min component count over {K_2, cycles} partitions of each vertex subset.
struct K2CycleSearch {
  const Graph& g;
  int n;
  std::vector<std::uint16_t> cycle_end;  // endpoints of Hamilton paths from lowest bit
  std::vector<bool> has_cycle;
  std::vector<std::uint8_t> memo;

  explicit K2CycleSearch(const Graph& graph) : g(graph), n(graph.order()) {
    const std::size_t states = std::size_t{1} << n;
    cycle_end.assign(states, 0);
    has_cycle.assign(states, false);
    memo.assign(states, 254);  // 254 = unknown
    build_cycles();
  }

  void build_cycles() {
    // Hamilton-path endpoints for every mask, path anchored at the mask's
    // lowest vertex; masks are visited in increasing order so extensions only
    // ever add higher-valued masks.
    const std::uint32_t states = std::uint32_t{1} << n;
    for (std::uint32_t mask = 1; mask < states; ++mask) {
      const int start = std::countr_zero(mask);
      if (mask == (std::uint32_t{1} << start)) {
        cycle_end[mask] = static_cast<std::uint16_t>(1u << start);
        continue;
      }
      std::uint16_t ends = 0;
      const std::uint32_t rest = mask & (mask - 1);  // mask minus nothing... recomputed below
      (void)rest;
      std::uint32_t candidates = mask & ~(std::uint32_t{1} << start);
      std::uint32_t bits = candidates;
      while (bits) {
        const int last = std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint32_t prev_mask = mask & ~(std::uint32_t{1} << last);
        if (std::countr_zero(prev_mask) != start) continue;  // start must stay lowest
        if (cycle_end[prev_mask] &
            static_cast<std::uint16_t>(g.neighbors(last) & prev_mask)) {
          ends |= static_cast<std::uint16_t>(1u << last);
        }
      }
      cycle_end[mask] = ends;
      if (std::popcount(mask) >= 3) {
        has_cycle[mask] =
            (ends & static_cast<std::uint16_t>(g.neighbors(start))) != 0;
      }
    }
  }

  std::uint8_t solve(std::uint32_t mask) {
    if (mask == 0) return 0;
    std::uint8_t& slot = memo[mask];
    if (slot != 254) return slot;
    slot = kImpossible;
    const int v = std::countr_zero(mask);
    std::uint8_t best = kImpossible;
    // K_2 through v first, then cycles by ascending submask.
    std::uint32_t nbrs = static_cast<std::uint32_t>(g.neighbors(v)) & mask;
    std::uint32_t bits = nbrs;
    while (bits) {
      const int u = std::countr_zero(bits);
      bits &= bits - 1;
      const std::uint8_t rest = solve(mask & ~((std::uint32_t{1} << v) | (std::uint32_t{1} << u)));
      if (rest != kImpossible && rest + 1 < best) best = static_cast<std::uint8_t>(rest + 1);
    }
    const std::uint32_t pool = mask & ~(std::uint32_t{1} << v);
    for (std::uint32_t sub = pool;; sub = (sub - 1) & pool) {
      const std::uint32_t comp = sub | (std::uint32_t{1} << v);
      if (std::popcount(comp) >= 3 && has_cycle[comp]) {
        const std::uint8_t rest = solve(mask & ~comp);
        if (rest != kImpossible && rest + 1 < best) best = static_cast<std::uint8_t>(rest + 1);
      }
      if (sub == 0) break;
    }
    slot = best;
    return best;
  }

  // First transition attaining the memoized optimum, same order as solve().
  void rebuild(std::uint32_t mask, std::vector<FactorComponent>& out) {
    while (mask != 0) {
      const std::uint8_t need = solve(mask);
      const int v = std::countr_zero(mask);
      bool advanced = false;
      std::uint32_t bits = static_cast<std::uint32_t>(g.neighbors(v)) & mask;
      while (bits && !advanced) {
        const int u = std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint32_t rest_mask = mask & ~((std::uint32_t{1} << v) | (std::uint32_t{1} << u));
        if (solve(rest_mask) + 1 == need) {
          out.push_back({FactorComponent::Type::edge, {v, u}});
          mask = rest_mask;
          advanced = true;
        }
      }
      if (advanced) continue;
      const std::uint32_t pool = mask & ~(std::uint32_t{1} << v);
      for (std::uint32_t sub = pool;; sub = (sub - 1) & pool) {
        const std::uint32_t comp = sub | (std::uint32_t{1} << v);
        if (std::popcount(comp) >= 3 && has_cycle[comp] &&
            solve(mask & ~comp) + 1 == need) {
          out.push_back({FactorComponent::Type::cycle, recover_cycle(comp)});
          mask &= ~comp;
          advanced = true;
          break;
        }
        if (sub == 0) break;
      }
      if (!advanced) throw std::logic_error("factor reconstruction lost the optimum");
    }
  }

  std::vector<int> recover_cycle(std::uint32_t comp) {
    const int start = std::countr_zero(comp);
    std::uint16_t closers = cycle_end[comp] & static_cast<std::uint16_t>(g.neighbors(start));
    int last = std::countr_zero(static_cast<std::uint32_t>(closers));
    std::vector<int> order;
    std::uint32_t mask = comp;
    while (last != start) {
      order.push_back(last);
      mask &= ~(std::uint32_t{1} << last);
      const std::uint16_t prevs =
          cycle_end[mask] & static_cast<std::uint16_t>(g.neighbors(last) & mask);
      last = std::countr_zero(static_cast<std::uint32_t>(prevs));
    }
    order.push_back(start);
    std::reverse(order.begin(), order.end());
    return order;
  }
};

struct StarSearch {
  const Graph& g;
  int n;
  int k;
  std::vector<std::uint8_t> memo;

  StarSearch(const Graph& graph, int max_star) : g(graph), n(graph.order()), k(max_star) {
    memo.assign(std::size_t{1} << n, 254);
  }

  template <typename Fn>
  void for_each_component(std::uint32_t mask, int v, Fn&& fn) {
    // Stars with v as the center, leaf sets ascending.
    const std::uint32_t own = static_cast<std::uint32_t>(g.neighbors(v)) & mask;
    for (std::uint32_t sub = own;; sub = (sub - 1) & own) {
      const int leaves = std::popcount(sub);
      if (leaves >= 1 && leaves <= k) {
        if (fn(v, sub)) return;
      }
      if (sub == 0) break;
    }
    // Stars with v as a leaf, centers ascending.
    std::uint32_t centers = own;
    while (centers) {
      const int c = std::countr_zero(centers);
      centers &= centers - 1;
      const std::uint32_t pool =
          static_cast<std::uint32_t>(g.neighbors(c)) & mask & ~(std::uint32_t{1} << v);
      for (std::uint32_t sub = pool;; sub = (sub - 1) & pool) {
        const std::uint32_t leaves_mask = sub | (std::uint32_t{1} << v);
        const int leaves = std::popcount(leaves_mask);
        if (leaves <= k) {
          if (fn(c, leaves_mask)) return;
        }
        if (sub == 0) break;
      }
    }
  }

  std::uint8_t solve(std::uint32_t mask) {
    if (mask == 0) return 0;
    std::uint8_t& slot = memo[mask];
    if (slot != 254) return slot;
    slot = kImpossible;
    const int v = std::countr_zero(mask);
    std::uint8_t best = kImpossible;
    for_each_component(mask, v, [&](int center, std::uint32_t leaves) {
      const std::uint32_t comp = leaves | (std::uint32_t{1} << center);
      const std::uint8_t rest = solve(mask & ~comp);
      if (rest != kImpossible && rest + 1 < best) best = static_cast<std::uint8_t>(rest + 1);
      return false;
    });
    slot = best;
    return best;
  }

  void rebuild(std::uint32_t mask, std::vector<FactorComponent>& out) {
    while (mask != 0) {
      const std::uint8_t need = solve(mask);
      const int v = std::countr_zero(mask);
      bool advanced = false;
      for_each_component(mask, v, [&](int center, std::uint32_t leaves) {
        const std::uint32_t comp = leaves | (std::uint32_t{1} << center);
        if (solve(mask & ~comp) + 1 == need) {
          std::vector<int> verts{center};
          const auto leaf_list = mask_to_vertices(leaves);
          verts.insert(verts.end(), leaf_list.begin(), leaf_list.end());
          out.push_back({FactorComponent::Type::star, std::move(verts)});
          mask &= ~comp;
          advanced = true;
          return true;
        }
        return false;
      });
      if (!advanced) throw std::logic_error("star reconstruction lost the optimum");
    }
  }
};

}  // namespace

std::optional<std::vector<FactorComponent>> find_k2_cycles_factor(const Graph& g) {
  const int n = g.order();
  if (n > kConstructMax) {
    throw std::invalid_argument("constructive factor search supports n <= 12");
  }
  if (n == 0) return std::vector<FactorComponent>{};
  K2CycleSearch search(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  if (search.solve(full) == kImpossible) return std::nullopt;
  std::vector<FactorComponent> comps;
  search.rebuild(full, comps);
  return comps;
}

std::optional<std::vector<FactorComponent>> find_star_factor(const Graph& g, int k) {
  const int n = g.order();
  if (n > kConstructMax) {
    throw std::invalid_argument("constructive factor search supports n <= 12");
  }
  if (k < 1) throw std::invalid_argument("star factor needs k >= 1");
  if (n == 0) return std::vector<FactorComponent>{};
  StarSearch search(g, k);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  if (search.solve(full) == kImpossible) return std::nullopt;
  std::vector<FactorComponent> comps;
  search.rebuild(full, comps);
  return comps;
}

FactorCertificate has_k2_ck_factor(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("k2/cycle factor needs k >= 3");
  FactorCertificate cert;
  cert.kind = FactorKind::k2ck_factor;
  cert.k = k;
  const DeficiencyResult def = max_deficiency(g, 1);
  cert.exists = def.value <= 0;
  if (!cert.exists) {
    cert.refutation = def.witness_s;
    return cert;
  }
  if (g.order() <= kConstructMax) {
    cert.components = find_k2_cycles_factor(g);
    if (!cert.components) {
      throw std::logic_error("criterion admits a factor but the search found none");
    }
  }
  return cert;
}

FactorCertificate has_star_factor(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("star factor needs k >= 2");
  FactorCertificate cert;
  cert.kind = FactorKind::star_factor;
  cert.k = k;
  const DeficiencyResult def = max_deficiency(g, k);
  cert.exists = def.value <= 0;
  if (!cert.exists) {
    cert.refutation = def.witness_s;
    return cert;
  }
  if (g.order() <= kConstructMax) {
    cert.components = find_star_factor(g, k);
    if (!cert.components) {
      throw std::logic_error("criterion admits a factor but the search found none");
    }
  }
  return cert;
}

bool validate_certificate(const Graph& g, const FactorCertificate& cert) {
  if (cert.components.has_value() == cert.refutation.has_value()) return false;
  if (cert.refutation) {
    std::uint64_t s_mask = 0;
    for (const int v : *cert.refutation) {
      if (v < 0 || v >= g.order()) return false;
      s_mask |= std::uint64_t{1} << v;
    }
    const int iso = isolated_after_removal(g, s_mask);
    const int weight = cert.kind == FactorKind::star_factor ? cert.k : 1;
    return iso > weight * static_cast<int>(cert.refutation->size());
  }

  std::uint64_t covered = 0;
  for (const auto& comp : *cert.components) {
    std::uint64_t comp_mask = 0;
    for (const int v : comp.vertices) {
      if (v < 0 || v >= g.order()) return false;
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (comp_mask & bit) return false;
      comp_mask |= bit;
    }
    if (covered & comp_mask) return false;
    covered |= comp_mask;
    switch (comp.type) {
      case FactorComponent::Type::edge:
        if (cert.kind != FactorKind::k2ck_factor) return false;
        if (comp.vertices.size() != 2) return false;
        if (!g.has_edge(comp.vertices[0], comp.vertices[1])) return false;
        break;
      case FactorComponent::Type::cycle: {
        if (cert.kind != FactorKind::k2ck_factor) return false;
        const std::size_t len = comp.vertices.size();
        if (len < 3) return false;
        for (std::size_t i = 0; i < len; ++i) {
          if (!g.has_edge(comp.vertices[i], comp.vertices[(i + 1) % len])) return false;
        }
        break;
      }
      case FactorComponent::Type::star: {
        if (cert.kind != FactorKind::star_factor) return false;
        if (comp.vertices.size() < 2 ||
            comp.vertices.size() > static_cast<std::size_t>(cert.k) + 1) {
          return false;
        }
        for (std::size_t i = 1; i < comp.vertices.size(); ++i) {
          if (!g.has_edge(comp.vertices[0], comp.vertices[i])) return false;
        }
        break;
      }
    }
  }
  const std::uint64_t all =
      g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  return covered == all;
}

}  // namespace sfl
