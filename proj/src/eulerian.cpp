#include "idla/eulerian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace idla::eulerian {
namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1, got " + std::to_string(n));
}

void require_brute_force_range(int n, const char* what) {
  if (n < 1 || n > kMaxBruteForceN) {
    throw std::invalid_argument(std::string(what) + ": n must be in [1, " +
                                std::to_string(kMaxBruteForceN) + "], got " + std::to_string(n));
  }
}

}  // namespace

std::vector<Rational> QEulerianRow::evaluate(const Rational& rho) const {
  std::vector<Rational> out;
  out.reserve(entries.size());
  for (const auto& p : entries) out.push_back(p.evaluate(rho));
  return out;
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[v]) {
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(values_.size()) + "}");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> values(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

std::vector<int> Permutation::descent_positions() const {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
    if (values_[i] > values_[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int Permutation::descent_count() const {
  int count = 0;
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) count += values_[i] > values_[i + 1];
  return count;
}

int Permutation::major_index() const {
  int maj = 0;
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
    if (values_[i] > values_[i + 1]) maj += static_cast<int>(i) + 1;
  }
  return maj;
}

bool Permutation::next() { return std::next_permutation(values_.begin(), values_.end()); }

EulerianRow eulerian_row(int n) {
  require_positive(n, "eulerian_row");
  std::vector<BigInt> row{1};
  for (int m = 2; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      BigInt value = 0;
      if (k >= 1) value += (m - k) * row[k - 1];
      if (k <= m - 2) value += (k + 1) * row[k];
      next[k] = value;
    }
    row = std::move(next);
  }
  return {n, std::move(row)};
}

EulerianRow eulerian_row_brute(int n) {
  require_brute_force_range(n, "eulerian_row_brute");
  std::vector<BigInt> counts(static_cast<std::size_t>(n), 0);
  auto w = Permutation::identity(n);
  do {
    counts[w.descent_count()] += 1;
  } while (w.next());
  return {n, std::move(counts)};
}

Polynomial eulerian_polynomial(int n) {
  const auto row = eulerian_row(n);
  std::vector<Rational> coefficients(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) coefficients[k] = Rational(row.entries[k - 1]);
  return Polynomial(std::move(coefficients));
}

BivariatePolynomial bivariate_polynomial(int n) {
  require_positive(n, "bivariate_polynomial");
  const auto row = eulerian_row(n);
  BivariatePolynomial out;
  for (int k = 1; k <= n; ++k) {
    out.add_term(static_cast<unsigned>(k), static_cast<unsigned>(n + 1 - k), Rational(row.entries[k - 1]));
  }
  return out;
}

QEulerianRow q_eulerian_row(int n) {
  require_brute_force_range(n, "q_eulerian_row");
  const int max_maj = n * (n - 1) / 2;
  // counts[des][maj]
  std::vector<std::vector<long>> counts(static_cast<std::size_t>(n),
                                        std::vector<long>(static_cast<std::size_t>(max_maj) + 1, 0));
  auto w = Permutation::identity(n);
  do {
    counts[w.descent_count()][w.major_index()] += 1;
  } while (w.next());

  QEulerianRow row{n, {}};
  row.entries.reserve(counts.size());
  for (const auto& by_maj : counts) {
    std::vector<Rational> coefficients;
    coefficients.reserve(by_maj.size());
    for (long c : by_maj) coefficients.emplace_back(c);
    row.entries.emplace_back(std::move(coefficients));
  }
  return row;
}

Rational q_integer(int m, const Rational& rho) {
  Rational sum;
  Rational power = 1;
  for (int j = 0; j < m; ++j) {
    sum += power;
    power *= rho;
  }
  return sum;
}

Rational q_factorial(int n, const Rational& rho) {
  require_positive(n, "q_factorial");
  Rational product = 1;
  for (int m = 1; m <= n; ++m) product *= q_integer(m, rho);
  return product;
}

}  // namespace idla::eulerian
