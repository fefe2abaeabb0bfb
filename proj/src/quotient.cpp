#include "sfl/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sfl {

QuotientMatrix quotient_matrix(const SplitGraphSpec& spec) {
  spec.validate();
  const int q = spec.inner_size();
  const double full[3][3] = {
      {static_cast<double>(spec.s - 1), static_cast<double>(q), static_cast<double>(spec.t)},
      {static_cast<double>(spec.s), static_cast<double>(q - 1), 0.0},
      {static_cast<double>(spec.s), 0.0, 0.0},
  };
  const int sizes[3] = {spec.s, q, spec.t};

  QuotientMatrix out;
  int keep[3];
  for (int i = 0; i < 3; ++i) {
    if (sizes[i] > 0) {
      keep[out.order] = i;
      out.part_sizes[static_cast<std::size_t>(out.order)] = sizes[i];
      ++out.order;
    }
  }
  for (int i = 0; i < out.order; ++i) {
    for (int j = 0; j < out.order; ++j) {
      out.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = full[keep[i]][keep[j]];
    }
  }
  return out;
}

std::array<double, 3> characteristic_polynomial(const QuotientMatrix& q) {
  const auto& a = q.entries;
  std::array<double, 3> c{};
  switch (q.order) {
    case 1:
      c[0] = -a[0][0];
      break;
    case 2:
      c[1] = -(a[0][0] + a[1][1]);
      c[0] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
      break;
    case 3: {
      const double tr = a[0][0] + a[1][1] + a[2][2];
      const double minors = a[0][0] * a[1][1] - a[0][1] * a[1][0] +
                            a[0][0] * a[2][2] - a[0][2] * a[2][0] +
                            a[1][1] * a[2][2] - a[1][2] * a[2][1];
      const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
      c[2] = -tr;
      c[1] = minors;
      c[0] = -det;
      break;
    }
    default:
      throw std::invalid_argument("quotient order must be 1..3");
  }
  return c;
}

double quotient_spectral_radius(const QuotientMatrix& q) {
  if (q.order < 1 || q.order > 3) throw std::invalid_argument("quotient order must be 1..3");
  for (int i = 0; i < q.order; ++i) {
    for (int j = 0; j < q.order; ++j) {
      if (q.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] < 0 && !(i == j)) {
        throw std::invalid_argument("quotient must be nonnegative off the diagonal");
      }
    }
  }
  const auto c = characteristic_polynomial(q);
  const int d = q.order;
  const auto p = [&](double x) {
    double v = 1.0;
    for (int k = d - 1; k >= 0; --k) v = v * x + c[static_cast<std::size_t>(k)];
    return v;
  };
  const auto dp = [&](double x) {
    double v = static_cast<double>(d);
    for (int k = d - 1; k >= 1; --k) v = v * x + k * c[static_cast<std::size_t>(k)];
    return v;
  };

  double x0 = 0.0;
  for (int i = 0; i < d; ++i) x0 += q.part_sizes[static_cast<std::size_t>(i)];
  x0 = std::max(x0, 1.0);

  // All eigenvalues are real (the quotient is diagonally similar to a
  // symmetric matrix), so Newton from above the largest root descends
  // monotonically onto it.
  double x = x0;
  for (int iter = 0; iter < 200; ++iter) {
    const double fx = p(x);
    const double fpx = dp(x);
    if (fpx <= 0.0) break;
    const double next = x - fx / fpx;
    if (next >= x) break;  // progress stalled at roundoff
    if (p(next) < 0.0) {
      // Overshot past the root; finish by bisection on [next, x].
      double lo = next;
      double hi = x;
      for (int b = 0; b < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++b) {
        const double mid = 0.5 * (lo + hi);
        if (p(mid) < 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return 0.5 * (lo + hi);
    }
    if (x - next <= 1e-15 * std::max(1.0, x)) return next;
    x = next;
  }
  return x;
}

bool partition_is_equitable(const Graph& g, const SplitGraphSpec& spec, const QuotientMatrix& q) {
  spec.validate();
  if (g.order() != spec.n) return false;
  const int sizes[3] = {spec.s, spec.inner_size(), spec.t};
  int begin[3];
  int offset = 0;
  for (int i = 0; i < 3; ++i) {
    begin[i] = offset;
    offset += sizes[i];
  }
  std::uint64_t masks[3];
  int kept = 0;
  for (int i = 0; i < 3; ++i) {
    if (sizes[i] == 0) continue;
    std::uint64_t m = 0;
    for (int v = begin[i]; v < begin[i] + sizes[i]; ++v) m |= std::uint64_t{1} << v;
    masks[kept++] = m;
  }
  if (kept != q.order) return false;
  for (int i = 0; i < kept; ++i) {
    std::uint64_t cell = masks[i];
    while (cell) {
      const int v = std::countr_zero(cell);
      cell &= cell - 1;
      for (int j = 0; j < kept; ++j) {
        const int row_sum = std::popcount(g.neighbors(v) & masks[j]);
        if (row_sum != static_cast<int>(q.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace sfl
