#pragma once

#include <vector>

#include "idla/algebra/polynomial.hpp"
#include "idla/algebra/rational.hpp"

namespace idla::eulerian {

using algebra::BigInt;
using algebra::BivariatePolynomial;
using algebra::Polynomial;
using algebra::Rational;

/// Largest n accepted by the permutation-enumeration routines.
inline constexpr int kMaxBruteForceN = 9;

/// Row n of the Eulerian triangle; entries[k] counts permutations of
/// {1..n} with exactly k descents, k = 0..n-1.
struct EulerianRow {
  int n = 0;
  std::vector<BigInt> entries;

  friend bool operator==(const EulerianRow&, const EulerianRow&) = default;
};

/// Row n of the descent/major-index refinement: entries[k] is the sum of
/// rho^maj(w) over permutations w with k descents, as a polynomial in rho.
struct QEulerianRow {
  int n = 0;
  std::vector<Polynomial> entries;

  /// Specializes every entry at the given rho.
  std::vector<Rational> evaluate(const Rational& rho) const;
};

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `values` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& values() const { return values_; }

  /// 1-indexed positions i with w(i) > w(i+1).
  std::vector<int> descent_positions() const;
  int descent_count() const;
  int major_index() const;

  /// Advances to the lexicographic successor; false once the last
  /// permutation has been passed (the values wrap to the identity).
  bool next();

 private:
  std::vector<int> values_;
};

inline int major_index(const Permutation& w) { return w.major_index(); }

/// Eulerian row from the triangle recurrence. Requires n >= 1.
EulerianRow eulerian_row(int n);

/// Eulerian row by counting descents over all of S_n. Requires 1 <= n <= 9.
EulerianRow eulerian_row_brute(int n);

/// A_n(x) = sum_{k=1..n} <n, k-1> x^k.
Polynomial eulerian_polynomial(int n);

/// A_n(s,t) = sum_{k=1..n} <n, k-1> s^k t^(n+1-k). Requires n >= 1.
BivariatePolynomial bivariate_polynomial(int n);

/// Requires 1 <= n <= 9.
QEulerianRow q_eulerian_row(int n);

/// [m] = 1 + rho + ... + rho^(m-1), summed directly so rho = 1 needs no
/// special case.
Rational q_integer(int m, const Rational& rho);

/// [n]! = [n][n-1]...[1]. Requires n >= 1.
Rational q_factorial(int n, const Rational& rho);

}  // namespace idla::eulerian
