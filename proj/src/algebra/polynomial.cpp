#include "idla/algebra/polynomial.hpp"

#include <algorithm>

namespace idla::algebra {

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : coefficients_(coefficients) {
  trim();
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t exponent) {
  std::vector<Rational> coefficients(exponent + 1);
  coefficients[exponent] = c;
  return Polynomial(std::move(coefficients));
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coefficients_.empty()) return std::nullopt;
  return coefficients_.size() - 1;
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coefficients_.size() ? coefficients_[i] : Rational{};
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      out[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
    }
  }
  return Polynomial(std::move(out));
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

void BivariatePolynomial::add_term(unsigned es, unsigned et, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({es, et}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational BivariatePolynomial::coefficient(unsigned es, unsigned et) const {
  const auto it = terms_.find({es, et});
  return it == terms_.end() ? Rational{} : it->second;
}

Rational BivariatePolynomial::evaluate(const Rational& s, const Rational& t) const {
  Rational acc;
  for (const auto& [exps, c] : terms_) acc += c * s.pow(exps.first) * t.pow(exps.second);
  return acc;
}

BivariatePolynomial BivariatePolynomial::mixed_partial() const {
  BivariatePolynomial out;
  for (const auto& [exps, c] : terms_) {
    const auto [es, et] = exps;
    if (es == 0 || et == 0) continue;
    out.add_term(es - 1, et - 1, c * Rational(static_cast<long>(es) * static_cast<long>(et)));
  }
  return out;
}

}  // namespace idla::algebra
