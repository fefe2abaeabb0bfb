#pragma once

#include <optional>
#include <vector>

#include "sfl/graph.hpp"
#include "sfl/split_spec.hpp"

namespace sfl {

struct SpectralResult {
  double rho = 0.0;            // largest adjacency eigenvalue (Rayleigh quotient)
  std::vector<double> perron;  // unit 2-norm, entrywise >= 0
  double residual = 0.0;       // ||A v - rho v||_2
  int iterations = 0;
  bool converged = false;
};

inline constexpr double kSpectralTol = 1e-10;
inline constexpr int kSpectralMaxIter = 100000;

// Power iteration on A + I from the all-ones vector; the shift keeps the
// Perron root strictly dominant in absolute value even for bipartite graphs.
SpectralResult spectral_radius(const Graph& g, double tol = kSpectralTol,
                               int max_iter = kSpectralMaxIter);

// Certified interval around rho: lower from the Rayleigh quotient, both sides
// from Collatz-Wielandt ratios of the final positive iterate.
struct SpectralBounds {
  double lower = 0.0;
  double upper = 0.0;
  SpectralResult detail;
};

SpectralBounds spectral_radius_bounds(const Graph& g, double tol = kSpectralTol,
                                      int max_iter = kSpectralMaxIter);

// True iff rho(sub) <= rho(super) + tol; throws unless sub is a spanning
// subgraph of super.
bool check_subgraph_monotonicity(const Graph& g_sub, const Graph& g_super, double tol = 1e-9);

// Common Perron entries on the three orbits of a realized split graph.
// Empty orbits (s = 0, or an empty inner clique) come back disengaged.
struct OrbitValues {
  std::optional<double> clique;       // V(K_s)
  std::optional<double> inner;        // V(K_{n-s-t})
  std::optional<double> independent;  // V(tK_1)
  double max_spread = 0.0;
  SpectralResult eig;
};

OrbitValues perron_vector_orbits(const Graph& g, const SplitGraphSpec& spec,
                                 double spread_bound = 1e-9);

}  // namespace sfl
