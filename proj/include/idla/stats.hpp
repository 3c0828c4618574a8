#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace idla::stats {

/// Goodness-of-fit summary for one empirical histogram against an exact law.
struct FitReport {
  double sse = 0.0;
  double chi_square_statistic = 0.0;
  /// Pooled cell count minus one.
  int degrees_of_freedom = 0;
  double max_abs_deviation = 0.0;
  /// (observed - expected) / sqrt(expected (1 - p)) per original cell.
  std::vector<double> per_cell_z_scores;
  /// Cells remaining after small-expectation pooling.
  int pooled_cells = 0;
};

/// Sum of squared differences. Throws std::invalid_argument on a length
/// mismatch.
double sse(std::span<const double> empirical, std::span<const double> exact);

/// A run of adjacent cells merged for the chi-square statistic.
struct PooledCell {
  std::size_t first = 0;
  std::size_t last = 0;  // inclusive
  double observed = 0.0;
  double expected = 0.0;
};

/// Merges cells with expected count below `min_expected` into the neighbour
/// on the side of the most probable cell, until every pooled cell reaches
/// the minimum or only one cell is left. Cells with zero expected
/// probability and zero observations are dropped first.
std::vector<PooledCell> pool_cells(std::span<const std::uint64_t> counts, std::span<const double> exact,
                                   std::uint64_t trials, double min_expected = 5.0);

/// Pearson chi-square with pooling. Throws std::invalid_argument when
/// trials == 0, the lengths differ or the counts do not sum to trials.
FitReport chi_square(std::span<const std::uint64_t> counts, std::span<const double> exact, std::uint64_t trials);

/// Standard normal upper quantile z with P(Z > z) = alpha.
double normal_upper_quantile(double alpha);

/// Wilson-Hilferty approximation to the upper-alpha chi-square quantile:
/// dof * (1 - 2/(9 dof) + z sqrt(2/(9 dof)))^3.
double chi_square_threshold(int degrees_of_freedom, double alpha = 1e-3);

}  // namespace idla::stats
