#pragma once

#include <array>

#include "sfl/graph.hpp"
#include "sfl/split_spec.hpp"

namespace sfl {

// Quotient of the adjacency matrix under the (join, inner, independent)
// partition; entries are the constant block row sums. Cells of size zero are
// dropped, so order may be below 3.
struct QuotientMatrix {
  int order = 0;
  std::array<std::array<double, 3>, 3> entries{};
  std::array<int, 3> part_sizes{};
};

QuotientMatrix quotient_matrix(const SplitGraphSpec& spec);

// Monic characteristic polynomial coefficients, lowest degree first:
// p(x) = x^order + c[order-1] x^{order-1} + ... + c[0].
std::array<double, 3> characteristic_polynomial(const QuotientMatrix& q);

// Largest (real) eigenvalue: Newton from above at x0 = sum of part sizes,
// with a bisection safeguard on [max diagonal, x0].
double quotient_spectral_radius(const QuotientMatrix& q);

// Exact check that every block of g's adjacency matrix has the constant row
// sums recorded in q, for the partition induced by spec.
bool partition_is_equitable(const Graph& g, const SplitGraphSpec& spec, const QuotientMatrix& q);

}  // namespace sfl
