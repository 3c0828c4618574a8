#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "idla/algebra/rational.hpp"
#include "idla/algebra/series.hpp"

namespace idla::runtime {

using algebra::Rational;
using algebra::TruncatedSeries;

/// n^3/12 + n^2/12.
Rational closed_form_E(int n);

/// n^2/4 - n/12. Equals closed_form_E(n) - closed_form_E(n-1) for every n;
/// as a per-particle toss count it is only meaningful for n >= 3.
Rational closed_form_delta_E(int n);

/// sum_{k=1..n-1} <n-1, k-1> / (n-1)! * k(n-k). Requires n >= 3.
Rational corollary_weighted_sum(int n);

/// d/ds d/dt A_{n-1}(s,t) at s = t = 1. Requires n >= 3.
Rational mixed_partial_weighted_sum(int n);

/// Expansion of x(1 - e^{z(x-1)}) / (e^{z(x-1)} - x) up to z^order.
/// Throws std::invalid_argument for x == 1 or order outside [1, 12].
TruncatedSeries univariate_egf_series(const Rational& x, std::size_t order);

/// True iff every coefficient z^n, 1 <= n <= order, of the series above
/// equals A_n(x) / n!.
bool univariate_egf_check(const Rational& x, std::size_t order);

/// (z^4 - 4z^3 + 6z^2 - 6z) / (6(z-1)^3) up to z^order.
TruncatedSeries delta_series(std::size_t order);

/// Outcome of the per-particle generating-function verification.
struct DeltaSeriesReport {
  bool passed = false;
  /// First failed sub-check, empty when everything passed.
  std::string failure;
};

/// Expands the rational function above and checks it four ways: against
/// the per-particle toss count (E_2 - E_1 = 1 at z^1, closed_form_delta_E(n+1)
/// beyond); against the displayed low-order terms
/// z + 2z^2 + 11/3 z^3; against the split into z^j/(1-z)^3 pieces with
/// their binomial coefficients; and against n^2/4 + 5n/12 + 1/6 for n >= 4.
/// Throws std::invalid_argument unless 1 <= order <= 40.
DeltaSeriesReport delta_series_report(std::size_t order);
bool delta_series_check(std::size_t order);

/// One row of the run-time table.
struct RuntimeReport {
  int n = 0;
  Rational E_n;               ///< exact engine
  Rational closed_E;          ///< closed form
  std::optional<Rational> delta_E_n;       ///< E_n - E_{n-1}, n >= 2
  std::optional<Rational> corollary_sum;   ///< n >= 3
  std::optional<Rational> closed_delta_E;  ///< n >= 3
  bool agreement = false;
};

/// Rows 1..max_n. Agreement requires E_1 = 0 at n = 1, and for n >= 2
/// that the engine matches the closed form; for n >= 3 additionally that
/// the first difference, the weighted sum and the closed difference agree.
std::vector<RuntimeReport> runtime_table(int max_n);

}  // namespace idla::runtime
