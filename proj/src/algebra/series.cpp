#include "idla/algebra/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace idla::algebra {

TruncatedSeries::TruncatedSeries(std::size_t order) : coefficients_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, std::size_t order)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  return TruncatedSeries(p.coefficients(), order);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coefficients_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  TruncatedSeries out(order());
  for (std::size_t i = 0; i + k <= order(); ++i) out.coefficients_[i + k] = coefficients_[i];
  return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  return *this;
}

TruncatedSeries operator+(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  TruncatedSeries out(std::min(lhs.order(), rhs.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coefficients_[i] = lhs[i] + rhs[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  TruncatedSeries out(std::min(lhs.order(), rhs.order()));
  for (std::size_t i = 0; i <= out.order(); ++i) out.coefficients_[i] = lhs[i] - rhs[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  TruncatedSeries out(std::min(lhs.order(), rhs.order()));
  for (std::size_t n = 0; n <= out.order(); ++n) {
    Rational acc;
    for (std::size_t i = 0; i <= n; ++i) acc += lhs[i] * rhs[n - i];
    out.coefficients_[n] = acc;
  }
  return out;
}

TruncatedSeries series_exp_linear(const Rational& a, std::size_t order) {
  std::vector<Rational> coefficients(order + 1);
  Rational term = 1;
  coefficients[0] = term;
  for (std::size_t n = 1; n <= order; ++n) {
    term = term * a / Rational(static_cast<long>(n));
    coefficients[n] = term;
  }
  return TruncatedSeries(std::move(coefficients), order);
}

TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den) {
  if (den[0].is_zero()) {
    throw std::domain_error("series_div: denominator has zero constant term");
  }
  const std::size_t order = std::min(num.order(), den.order());
  const Rational inv_lead = den[0].reciprocal();
  std::vector<Rational> out(order + 1);
  // r_n = (num_n - sum_{i=1..n} den_i r_{n-i}) / den_0
  for (std::size_t n = 0; n <= order; ++n) {
    Rational acc = num[n];
    for (std::size_t i = 1; i <= n; ++i) acc -= den[i] * out[n - i];
    out[n] = acc * inv_lead;
  }
  return TruncatedSeries(std::move(out), order);
}

}  // namespace idla::algebra
