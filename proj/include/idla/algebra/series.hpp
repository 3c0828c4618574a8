#pragma once

#include <cstddef>
#include <vector>

#include "idla/algebra/polynomial.hpp"
#include "idla/algebra/rational.hpp"

namespace idla::algebra {

/// Formal power series in z truncated after z^order.
///
/// The coefficient list always has exactly order + 1 entries. Binary
/// operations produce a result at the smaller of the two operand orders;
/// nothing ever extends a series past the order it was built with.
class TruncatedSeries {
 public:
  /// The zero series at the given order.
  explicit TruncatedSeries(std::size_t order);

  /// Coefficients beyond `order` are dropped; missing ones are zero.
  TruncatedSeries(std::vector<Rational> coefficients, std::size_t order);

  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);
  static TruncatedSeries one(std::size_t order);

  std::size_t order() const { return coefficients_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coefficients_.at(i); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  /// Multiplies by z^k, dropping whatever falls past the order.
  TruncatedSeries shifted(std::size_t k) const;

  TruncatedSeries& operator*=(const Rational& scalar);

  friend TruncatedSeries operator+(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  friend TruncatedSeries operator-(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  friend TruncatedSeries operator*(TruncatedSeries lhs, const Rational& rhs) { return lhs *= rhs; }
  friend TruncatedSeries operator*(const Rational& lhs, TruncatedSeries rhs) { return rhs *= lhs; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coefficients_;
};

/// exp(a z) truncated at `order`: coefficient n is a^n / n!.
TruncatedSeries series_exp_linear(const Rational& a, std::size_t order);

/// num / den in the truncated series ring. Throws std::domain_error when the
/// constant term of `den` is zero.
TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den);

}  // namespace idla::algebra
