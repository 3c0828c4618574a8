#include "idla/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

namespace idla::stats {

double sse(std::span<const double> empirical, std::span<const double> exact) {
  if (empirical.size() != exact.size()) throw std::invalid_argument("sse: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double d = empirical[i] - exact[i];
    sum += d * d;
  }
  return sum;
}

std::vector<PooledCell> pool_cells(std::span<const std::uint64_t> counts, std::span<const double> exact,
                                   std::uint64_t trials, double min_expected) {
  if (counts.size() != exact.size()) throw std::invalid_argument("pool_cells: length mismatch");
  std::vector<PooledCell> cells;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (exact[i] == 0.0 && counts[i] == 0) continue;
    cells.push_back({i, i, static_cast<double>(counts[i]), exact[i] * static_cast<double>(trials)});
  }
  if (cells.empty()) return cells;

  const auto mode_it = std::max_element(cells.begin(), cells.end(),
                                        [](const PooledCell& a, const PooledCell& b) { return a.expected < b.expected; });
  std::size_t mode_cell = mode_it->first;  // original index of the most probable cell

  for (;;) {
    if (cells.size() <= 1) break;
    auto smallest = std::min_element(cells.begin(), cells.end(),
                                     [](const PooledCell& a, const PooledCell& b) { return a.expected < b.expected; });
    if (smallest->expected >= min_expected) break;
    const auto idx = static_cast<std::size_t>(smallest - cells.begin());
    std::size_t into;
    if (smallest->last < mode_cell) {
      into = idx + 1;
    } else if (smallest->first > mode_cell) {
      into = idx - 1;
    } else if (idx == 0) {
      into = 1;
    } else if (idx + 1 == cells.size()) {
      into = idx - 1;
    } else {
      into = cells[idx - 1].expected >= cells[idx + 1].expected ? idx - 1 : idx + 1;
    }
    auto& target = cells[into];
    target.first = std::min(target.first, smallest->first);
    target.last = std::max(target.last, smallest->last);
    target.observed += smallest->observed;
    target.expected += smallest->expected;
    cells.erase(smallest);
  }
  return cells;
}

FitReport chi_square(std::span<const std::uint64_t> counts, std::span<const double> exact, std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("chi_square: trials must be positive");
  if (counts.size() != exact.size()) throw std::invalid_argument("chi_square: length mismatch");
  if (std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}) != trials) {
    throw std::invalid_argument("chi_square: counts do not sum to trials");
  }

  FitReport report;
  const double t = static_cast<double>(trials);
  std::vector<double> empirical(counts.size());
  bool impossible_observed = false;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    empirical[i] = static_cast<double>(counts[i]) / t;
    report.max_abs_deviation = std::max(report.max_abs_deviation, std::abs(empirical[i] - exact[i]));
    const double expected = exact[i] * t;
    const double spread = expected * (1.0 - exact[i]);
    const double diff = static_cast<double>(counts[i]) - expected;
    if (spread > 0.0) {
      report.per_cell_z_scores.push_back(diff / std::sqrt(spread));
    } else {
      report.per_cell_z_scores.push_back(diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff));
    }
    if (exact[i] == 0.0 && counts[i] != 0) impossible_observed = true;
  }
  report.sse = sse(empirical, exact);

  const auto cells = pool_cells(counts, exact, trials);
  report.pooled_cells = static_cast<int>(cells.size());
  report.degrees_of_freedom = std::max(0, report.pooled_cells - 1);
  if (impossible_observed) {
    report.chi_square_statistic = std::numeric_limits<double>::infinity();
    return report;
  }
  for (const auto& c : cells) {
    const double d = c.observed - c.expected;
    report.chi_square_statistic += d * d / c.expected;
  }
  return report;
}

double normal_upper_quantile(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("normal_upper_quantile: alpha must be in (0, 1)");
  const boost::math::normal standard;
  return boost::math::quantile(boost::math::complement(standard, alpha));
}

double chi_square_threshold(int degrees_of_freedom, double alpha) {
  if (degrees_of_freedom < 1) throw std::invalid_argument("chi_square_threshold: dof must be >= 1");
  const double k = degrees_of_freedom;
  const double h = 2.0 / (9.0 * k);
  const double base = 1.0 - h + normal_upper_quantile(alpha) * std::sqrt(h);
  return k * base * base * base;
}

}  // namespace idla::stats
