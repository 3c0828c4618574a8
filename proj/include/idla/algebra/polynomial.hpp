#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "idla/algebra/rational.hpp"

namespace idla::algebra {

/// Dense univariate polynomial with rational coefficients. Index i of the
/// coefficient list is the coefficient of x^i; trailing zeros are never stored,
/// so the zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coefficients);
  explicit Polynomial(std::vector<Rational> coefficients);

  /// c * x^exponent.
  static Polynomial monomial(const Rational& c, std::size_t exponent);

  /// Degree, or std::nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coefficients_.empty(); }

  /// Coefficient of x^i (zero beyond the degree).
  Rational coefficient(std::size_t i) const;
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  /// Horner evaluation.
  Rational evaluate(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

/// Free-function form of Polynomial::evaluate.
inline Rational poly_eval(const Polynomial& p, const Rational& x) { return p.evaluate(x); }

/// Sparse polynomial in two variables s and t. Terms are keyed by
/// (exponent of s, exponent of t) and iterate in lexicographic order;
/// zero-valued terms are never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<unsigned, unsigned>;
  using TermMap = std::map<Exponents, Rational>;

  BivariatePolynomial() = default;

  /// Adds c * s^es * t^et to the polynomial.
  void add_term(unsigned es, unsigned et, const Rational& c);

  Rational coefficient(unsigned es, unsigned et) const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Rational evaluate(const Rational& s, const Rational& t) const;

  /// d/ds d/dt, computed term-wise from the exponents.
  BivariatePolynomial mixed_partial() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  TermMap terms_;
};

}  // namespace idla::algebra
