#include "idla/runtime.hpp"

#include <stdexcept>
#include <string>

#include "idla/algebra/binomial.hpp"
#include "idla/chain.hpp"
#include "idla/eulerian.hpp"

namespace idla::runtime {
namespace {

using algebra::BigInt;
using algebra::Polynomial;

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

// C(top, 2) with the convention that a negative top gives zero.
Rational choose2(long top) { return top < 0 ? Rational{} : Rational(algebra::binomial(top, 2)); }

}  // namespace

Rational closed_form_E(int n) {
  const Rational m(n);
  return m.pow(3) / Rational(12) + m.pow(2) / Rational(12);
}

Rational closed_form_delta_E(int n) {
  const Rational m(n);
  return m.pow(2) / Rational(4) - m / Rational(12);
}

Rational corollary_weighted_sum(int n) {
  require(n >= 3, "corollary_weighted_sum: n must be >= 3, got " + std::to_string(n));
  const auto row = eulerian::eulerian_row(n - 1);
  Rational sum;
  for (int k = 1; k <= n - 1; ++k) sum += Rational(row.entries[k - 1]) * Rational(k * (n - k));
  return sum / Rational(algebra::factorial(n - 1));
}

Rational mixed_partial_weighted_sum(int n) {
  require(n >= 3, "mixed_partial_weighted_sum: n must be >= 3, got " + std::to_string(n));
  return eulerian::bivariate_polynomial(n - 1).mixed_partial().evaluate(1, 1);
}

TruncatedSeries univariate_egf_series(const Rational& x, std::size_t order) {
  require(x != Rational(1), "univariate_egf_series: x = 1 is a singular point of this expansion");
  require(order >= 1 && order <= 12, "univariate_egf_series: order must be in [1, 12]");
  const auto e = algebra::series_exp_linear(x - Rational(1), order);
  const auto one = TruncatedSeries::one(order);
  const auto num = (one - e) * x;
  const auto den = e - one * x;
  return algebra::series_div(num, den);
}

bool univariate_egf_check(const Rational& x, std::size_t order) {
  const auto g = univariate_egf_series(x, order);
  if (!g[0].is_zero()) return false;
  for (std::size_t n = 1; n <= order; ++n) {
    const int m = static_cast<int>(n);
    const Rational expected = eulerian::eulerian_polynomial(m).evaluate(x) / Rational(algebra::factorial(m));
    if (g[n] != expected) return false;
  }
  return true;
}

TruncatedSeries delta_series(std::size_t order) {
  const auto num = TruncatedSeries::from_polynomial(Polynomial{0, -6, 6, -4, 1}, order);
  const auto den = TruncatedSeries::from_polynomial(Polynomial{-6, 18, -18, 6}, order);
  return algebra::series_div(num, den);
}

DeltaSeriesReport delta_series_report(std::size_t order) {
  require(order >= 1 && order <= 40, "delta_series_check: order must be in [1, 40]");
  DeltaSeriesReport report;
  const auto fail = [&](std::string why) {
    report.failure = std::move(why);
    return report;
  };

  const auto series = delta_series(order);
  if (!series[0].is_zero()) return fail("constant term is " + series[0].to_string());
  // z^1 carries the second particle's single toss, E_2 - E_1 = 1; the
  // quadratic n^2/4 - n/12 only describes particles 3 onwards.
  for (std::size_t n = 1; n <= order; ++n) {
    const Rational expected = n == 1 ? Rational(1) : closed_form_delta_E(static_cast<int>(n) + 1);
    if (series[n] != expected) {
      return fail("z^" + std::to_string(n) + ": series " + series[n].to_string() + " vs delta E " +
                  expected.to_string());
    }
  }

  const Rational low_order[] = {Rational(1), Rational(2), Rational(11, 3)};
  for (std::size_t n = 1; n <= std::min<std::size_t>(order, 3); ++n) {
    if (series[n] != low_order[n - 1]) {
      return fail("low-order z^" + std::to_string(n) + " is " + series[n].to_string());
    }
  }

  // 1/(1-z)^3 = sum C(n+2, 2) z^n
  const auto cube = algebra::series_div(TruncatedSeries::one(order),
                                        TruncatedSeries::from_polynomial(Polynomial{1, -3, 3, -1}, order));
  for (std::size_t n = 0; n <= order; ++n) {
    if (cube[n] != choose2(static_cast<long>(n) + 2)) {
      return fail("1/(1-z)^3 at z^" + std::to_string(n) + " is " + cube[n].to_string());
    }
  }

  // z/(1-z)^3 - z^2/(1-z)^3 + (2/3) z^3/(1-z)^3 - (1/6) z^4/(1-z)^3
  const TruncatedSeries pieces[] = {cube.shifted(1), cube.shifted(2) * Rational(-1),
                                    cube.shifted(3) * Rational(2, 3), cube.shifted(4) * Rational(-1, 6)};
  const auto piece_closed = [](int piece, long n) -> Rational {
    switch (piece) {
      case 0: return n >= 1 ? choose2(n + 1) : Rational{};
      case 1: return n >= 2 ? -choose2(n) : Rational{};
      case 2: return n >= 3 ? Rational(2, 3) * choose2(n - 1) : Rational{};
      default: return n >= 4 ? Rational(-1, 6) * choose2(n - 2) : Rational{};
    }
  };
  auto sum = TruncatedSeries(order);
  for (int piece = 0; piece < 4; ++piece) {
    for (std::size_t n = 0; n <= order; ++n) {
      if (pieces[piece][n] != piece_closed(piece, static_cast<long>(n))) {
        return fail("piece " + std::to_string(piece + 1) + " at z^" + std::to_string(n) + " is " +
                    pieces[piece][n].to_string());
      }
    }
    sum = sum + pieces[piece];
  }
  if (sum != series) return fail("four-piece split does not sum to the expansion");

  for (std::size_t n = 4; n <= order; ++n) {
    const Rational m(static_cast<long>(n));
    const Rational general = m.pow(2) / Rational(4) + Rational(5, 12) * m + Rational(1, 6);
    if (series[n] != general) {
      return fail("general term at z^" + std::to_string(n) + ": " + series[n].to_string() + " vs " +
                  general.to_string());
    }
  }
  report.passed = true;
  return report;
}

bool delta_series_check(std::size_t order) { return delta_series_report(order).passed; }

std::vector<RuntimeReport> runtime_table(int max_n) {
  require(max_n >= 1, "runtime_table: max_n must be >= 1, got " + std::to_string(max_n));
  std::vector<RuntimeReport> rows;
  rows.reserve(static_cast<std::size_t>(max_n));
  Rational engine_E;  // E_1 = 0
  for (int n = 1; n <= max_n; ++n) {
    RuntimeReport row;
    row.n = n;
    row.closed_E = closed_form_E(n);
    if (n == 1) {
      row.E_n = engine_E;
      row.agreement = row.E_n.is_zero();
      rows.push_back(std::move(row));
      continue;
    }
    const Rational step = chain::expected_particle_tosses(n);
    engine_E += step;
    row.E_n = engine_E;
    row.delta_E_n = row.E_n - rows.back().E_n;
    bool ok = row.E_n == row.closed_E && *row.delta_E_n == step;
    if (n >= 3) {
      row.corollary_sum = corollary_weighted_sum(n);
      row.closed_delta_E = closed_form_delta_E(n);
      ok = ok && *row.corollary_sum == *row.delta_E_n && *row.closed_delta_E == *row.delta_E_n;
    }
    row.agreement = ok;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace idla::runtime
