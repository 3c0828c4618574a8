#pragma once

#include <stdexcept>
#include <vector>

#include "idla/algebra/rational.hpp"

namespace idla::detail {

// Solves lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i] exactly
// (Thomas algorithm). lower[0] and upper[m-1] are ignored.
inline std::vector<algebra::Rational> solve_tridiagonal(const std::vector<algebra::Rational>& lower,
                                                        const std::vector<algebra::Rational>& diag,
                                                        const std::vector<algebra::Rational>& upper,
                                                        const std::vector<algebra::Rational>& rhs) {
  using algebra::Rational;
  const std::size_t m = diag.size();
  if (lower.size() != m || upper.size() != m || rhs.size() != m) {
    throw std::invalid_argument("solve_tridiagonal: band sizes differ");
  }
  std::vector<Rational> c(m);
  std::vector<Rational> d(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational pivot = diag[i];
    Rational value = rhs[i];
    if (i > 0) {
      pivot -= lower[i] * c[i - 1];
      value -= lower[i] * d[i - 1];
    }
    if (pivot.is_zero()) throw std::domain_error("solve_tridiagonal: singular system");
    c[i] = (i + 1 < m) ? upper[i] / pivot : Rational{};
    d[i] = value / pivot;
  }
  std::vector<Rational> x(m);
  for (std::size_t i = m; i-- > 0;) {
    x[i] = d[i];
    if (i + 1 < m) x[i] -= c[i] * x[i + 1];
  }
  return x;
}

}  // namespace idla::detail
