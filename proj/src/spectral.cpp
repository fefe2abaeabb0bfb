#include "sfl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sfl {

namespace {

void multiply(const Graph& g, const std::vector<double>& v, std::vector<double>& out) {
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    std::uint64_t bits = g.neighbors(i);
    while (bits) {
      const int j = std::countr_zero(bits);
      bits &= bits - 1;
      sum += v[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(i)] = sum;
  }
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (const double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol, int max_iter) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("spectral_radius requires n >= 1");
  if (tol <= 0) throw std::invalid_argument("spectral_radius requires tol > 0");

  SpectralResult res;
  res.perron.assign(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> av(static_cast<std::size_t>(n), 0.0);

  for (int iter = 1; iter <= max_iter; ++iter) {
    multiply(g, res.perron, av);
    double rho = 0.0;
    for (int i = 0; i < n; ++i) rho += res.perron[static_cast<std::size_t>(i)] * av[static_cast<std::size_t>(i)];
    double resid = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = av[static_cast<std::size_t>(i)] - rho * res.perron[static_cast<std::size_t>(i)];
      resid += r * r;
    }
    resid = std::sqrt(resid);
    res.rho = rho;
    res.residual = resid;
    res.iterations = iter;
    if (resid <= tol) {
      res.converged = true;
      break;
    }
    // Next iterate: (A + I) v, normalized.
    double norm = 0.0;
    for (int i = 0; i < n; ++i) {
      av[static_cast<std::size_t>(i)] += res.perron[static_cast<std::size_t>(i)];
      norm += av[static_cast<std::size_t>(i)] * av[static_cast<std::size_t>(i)];
    }
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) res.perron[static_cast<std::size_t>(i)] = av[static_cast<std::size_t>(i)] / norm;
  }
  return res;
}

SpectralBounds spectral_radius_bounds(const Graph& g, double tol, int max_iter) {
  SpectralBounds b;
  b.detail = spectral_radius(g, tol, max_iter);
  const int n = g.order();
  std::vector<double> v = b.detail.perron;
  // The iterate is strictly positive in exact arithmetic; clamp so the
  // Collatz-Wielandt ratios stay well defined after underflow.
  for (double& x : v) x = std::max(x, 1e-200);
  std::vector<double> av(static_cast<std::size_t>(n), 0.0);
  multiply(g, v, av);
  double lo = 1e300;
  double hi = 0.0;
  for (int i = 0; i < n; ++i) {
    const double ratio = av[static_cast<std::size_t>(i)] / v[static_cast<std::size_t>(i)];
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  b.lower = std::max(lo, b.detail.rho);  // Rayleigh quotient also bounds from below
  b.upper = hi;
  return b;
}

bool check_subgraph_monotonicity(const Graph& g_sub, const Graph& g_super, double tol) {
  if (g_sub.order() != g_super.order()) {
    throw std::invalid_argument("subgraph monotonicity needs equal orders");
  }
  for (int v = 0; v < g_sub.order(); ++v) {
    if (g_sub.neighbors(v) & ~g_super.neighbors(v)) {
      throw std::invalid_argument("first graph is not a spanning subgraph of the second");
    }
  }
  if (g_sub.order() == 0) return true;
  const double lo = spectral_radius(g_sub).rho;
  const double hi = spectral_radius(g_super).rho;
  return lo <= hi + tol;
}

OrbitValues perron_vector_orbits(const Graph& g, const SplitGraphSpec& spec,
                                 double spread_bound) {
  spec.validate();
  if (g.order() != spec.n) throw std::invalid_argument("graph order does not match spec");

  OrbitValues out;
  out.eig = spectral_radius(g, 1e-12, kSpectralMaxIter);
  if (!out.eig.converged) throw std::runtime_error("eigensolve did not converge for orbit extraction");

  const auto orbit = [&](int begin, int end) -> std::optional<double> {
    if (begin >= end) return std::nullopt;
    double lo = 1e300;
    double hi = -1e300;
    double sum = 0.0;
    for (int v = begin; v < end; ++v) {
      const double x = out.eig.perron[static_cast<std::size_t>(v)];
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      sum += x;
    }
    out.max_spread = std::max(out.max_spread, hi - lo);
    return sum / (end - begin);
  };

  out.clique = orbit(0, spec.s);
  out.inner = orbit(spec.s, spec.s + spec.inner_size());
  out.independent = orbit(spec.s + spec.inner_size(), spec.n);
  if (out.max_spread >= spread_bound) {
    throw std::runtime_error("Perron orbit spread " + std::to_string(out.max_spread) +
                             " exceeds bound; partition not equitable or eigensolve stale");
  }
  return out;
}

}  // namespace sfl
