#pragma once

// Spanning-tree counts and Laplacian characteristic polynomials via exact
// determinants.

#include <vector>

#include "kappa/errors.hpp"
#include "kappa/graph.hpp"
#include "kappa/linalg.hpp"

namespace kappa {

/// Kirchhoff: kappa(g) is any cofactor of the Laplacian; we delete vertex 0.
/// Disconnected graphs yield 0.
inline BigInt kappa_matrix_tree(const SimpleGraph& g) {
  if (g.size() <= 1) return 1;
  return det_bareiss(laplacian_matrix(g).without(0));
}

/// kappa(g) = det(J + L) / n^2. The division is asserted exact.
inline BigInt kappa_via_JL(const SimpleGraph& g) {
  const std::size_t n = g.size();
  if (n == 0) return 1;
  IntMatrix m = laplacian_matrix(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) += 1;
  BigInt det = det_bareiss(std::move(m));
  const BigInt n2 = BigInt(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n);
  if (det % n2 != 0) throw ConsistencyError("kappa_via_JL: det(J+L) not divisible by n^2");
  return det / n2;
}

/// sigma(g; mu) = det(mu I - L), by exact evaluation at mu = 0..n followed by
/// integer-node interpolation.
inline IntPolynomial laplacian_char_poly(const SimpleGraph& g) {
  const std::size_t n = g.size();
  const IntMatrix lap = laplacian_matrix(g);
  std::vector<BigInt> values;
  values.reserve(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = -lap(i, j);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += static_cast<unsigned long>(t);
    values.push_back(det_bareiss(std::move(m)));
  }
  IntPolynomial poly = interpolate_integer_nodes(values);
  if (poly.degree() != static_cast<long>(n) || poly.coeff(n) != 1 || poly.coeff(0) != 0) {
    if (n > 0) throw ConsistencyError("laplacian_char_poly: result is not monic of degree n with zero constant term");
  }
  return poly;
}

/// (mu_1 + m)...(mu_{n-1} + m) = (-1)^n sigma(g; -m) / m, with the division
/// by m asserted exact.
inline BigInt shifted_eigenvalue_product(const SimpleGraph& g, long m) {
  if (m == 0) throw DomainError("shifted_eigenvalue_product: m must be nonzero");
  BigInt value = laplacian_char_poly(g).evaluate(BigInt(-m));
  if (g.size() % 2 == 1) value = -value;
  if (value % m != 0) throw ConsistencyError("shifted_eigenvalue_product: sigma(-m) not divisible by m");
  return value / m;
}

}  // namespace kappa
