#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "idla/chain.hpp"
#include "idla/random.hpp"

namespace idla::montecarlo {

using chain::Bias;
using Stream = random::Xoshiro256StarStar;

/// A coin that lands right when a uniform 64-bit draw falls below
/// floor(p_right * 2^64).
class Coin {
 public:
  explicit Coin(const Bias& bias);

  std::uint64_t threshold() const { return threshold_; }
  bool right(Stream& stream) const { return stream() < threshold_; }

 private:
  std::uint64_t threshold_;
};

struct SimConfig {
  int n_particles = 1;
  std::uint64_t trials = 1;
  Bias bias = Bias::fair();
  std::uint64_t master_seed = 0;
  unsigned worker_count = 1;
};

struct GameResult {
  int final_k = 0;
  std::uint64_t total_tosses = 0;
  int min_pos = 0;
  int max_pos = 0;
};

struct TrialBatchSummary {
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> counts_by_k;
  double mean_tosses = 0.0;
  /// Unbiased sample variance; zero for a single trial.
  double variance_tosses = 0.0;
  /// Exact moment sums the mean and variance are derived from.
  std::uint64_t toss_sum = 0;
  unsigned __int128 toss_sum_sq = 0;
  std::uint64_t min_tosses = 0;
  std::uint64_t max_tosses = 0;
  /// Extreme walker positions over every trial.
  int min_pos = 0;
  int max_pos = 0;

  /// Standard error of mean_tosses.
  double mean_standard_error() const;
};

/// Plays one game with n particles; the first one occupies the origin
/// without tossing. Requires n >= 1.
GameResult run_single_game(int n, const Coin& coin, Stream& stream);
GameResult run_single_game(int n, const Bias& bias, Stream& stream);

/// Runs config.trials games; trial t draws from the substream derived from
/// (master_seed, t), so the summary does not depend on worker_count.
TrialBatchSummary run_trials(const SimConfig& config);

/// Occupied-site counts after exactly `tosses` tosses, over `trials` runs.
/// Keys are occupied counts.
std::map<int, std::uint64_t> empirical_ntoss(int tosses, std::uint64_t trials, const Bias& bias,
                                             std::uint64_t master_seed, unsigned worker_count = 1);

}  // namespace idla::montecarlo
