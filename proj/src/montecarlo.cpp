#include "idla/montecarlo.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace idla::montecarlo {
namespace {

// Splits [0, trials) into `workers` contiguous chunks and runs `body` on
// each, collecting one partial result per chunk in chunk order.
template <typename Partial, typename Body>
std::vector<Partial> run_chunked(std::uint64_t trials, unsigned workers, Body body) {
  workers = std::max(1U, workers);
  if (trials < workers) workers = static_cast<unsigned>(std::max<std::uint64_t>(1, trials));
  std::vector<Partial> partials(workers);
  const std::uint64_t base = trials / workers;
  const std::uint64_t extra = trials % workers;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + base + (w < extra ? 1 : 0);
    if (workers == 1) {
      body(begin, end, partials[w]);
    } else {
      threads.emplace_back([&body, &partials, w, begin, end] { body(begin, end, partials[w]); });
    }
    begin = end;
  }
  for (auto& t : threads) t.join();
  return partials;
}

}  // namespace

Coin::Coin(const Bias& bias) {
  const auto& p = bias.p_right();
  mpz_class scaled = p.numerator();
  scaled <<= 64;
  scaled /= p.denominator();
  threshold_ = mpz_get_ui(scaled.get_mpz_t());
}

double TrialBatchSummary::mean_standard_error() const {
  if (trials == 0) return 0.0;
  return std::sqrt(variance_tosses / static_cast<double>(trials));
}

GameResult run_single_game(int n, const Coin& coin, Stream& stream) {
  if (n < 1) throw std::invalid_argument("run_single_game: n must be >= 1, got " + std::to_string(n));
  int a = 0;  // occupied sites left of the origin
  int b = 0;  // occupied sites right of the origin
  std::uint64_t tosses = 0;
  for (int particle = 2; particle <= n; ++particle) {
    int x = 0;
    for (;;) {
      x += coin.right(stream) ? 1 : -1;
      ++tosses;
      if (x > b) {
        ++b;
        break;
      }
      if (x < -a) {
        ++a;
        break;
      }
    }
    assert(x == b || x == -a);
  }
  assert(a + b + 1 == n);
  return {b, tosses, -a, b};
}

GameResult run_single_game(int n, const Bias& bias, Stream& stream) {
  return run_single_game(n, Coin(bias), stream);
}

TrialBatchSummary run_trials(const SimConfig& config) {
  if (config.n_particles < 1) throw std::invalid_argument("run_trials: n_particles must be >= 1");
  if (config.trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
  const Coin coin(config.bias);
  const int n = config.n_particles;

  struct Partial {
    std::vector<std::uint64_t> counts;
    std::uint64_t sum = 0;
    unsigned __int128 sum_sq = 0;
    std::uint64_t min_tosses = UINT64_MAX;
    std::uint64_t max_tosses = 0;
    int min_pos = 0;
    int max_pos = 0;
  };

  auto partials = run_chunked<Partial>(
      config.trials, config.worker_count, [&](std::uint64_t begin, std::uint64_t end, Partial& out) {
        out.counts.assign(static_cast<std::size_t>(n), 0);
        for (std::uint64_t t = begin; t < end; ++t) {
          Stream stream(random::substream_seed(config.master_seed, t));
          const auto game = run_single_game(n, coin, stream);
          ++out.counts[static_cast<std::size_t>(game.final_k)];
          out.sum += game.total_tosses;
          out.sum_sq += static_cast<unsigned __int128>(game.total_tosses) * game.total_tosses;
          out.min_tosses = std::min(out.min_tosses, game.total_tosses);
          out.max_tosses = std::max(out.max_tosses, game.total_tosses);
          out.min_pos = std::min(out.min_pos, game.min_pos);
          out.max_pos = std::max(out.max_pos, game.max_pos);
        }
      });

  TrialBatchSummary summary;
  summary.trials = config.trials;
  summary.counts_by_k.assign(static_cast<std::size_t>(n), 0);
  summary.min_tosses = UINT64_MAX;
  for (const auto& p : partials) {
    if (p.counts.empty()) continue;
    for (std::size_t k = 0; k < p.counts.size(); ++k) summary.counts_by_k[k] += p.counts[k];
    summary.toss_sum += p.sum;
    summary.toss_sum_sq += p.sum_sq;
    summary.min_tosses = std::min(summary.min_tosses, p.min_tosses);
    summary.max_tosses = std::max(summary.max_tosses, p.max_tosses);
    summary.min_pos = std::min(summary.min_pos, p.min_pos);
    summary.max_pos = std::max(summary.max_pos, p.max_pos);
  }

  // Moments from exact integer sums: T*S2 - S1^2 is formed without rounding.
  const auto trials = static_cast<long double>(summary.trials);
  summary.mean_tosses = static_cast<double>(static_cast<long double>(summary.toss_sum) / trials);
  if (summary.trials > 1) {
    const unsigned __int128 s1 = summary.toss_sum;
    const unsigned __int128 spread = static_cast<unsigned __int128>(summary.trials) * summary.toss_sum_sq - s1 * s1;
    summary.variance_tosses =
        static_cast<double>(static_cast<long double>(spread) / (trials * (trials - 1.0L)));
  }
  return summary;
}

std::map<int, std::uint64_t> empirical_ntoss(int tosses, std::uint64_t trials, const Bias& bias,
                                             std::uint64_t master_seed, unsigned worker_count) {
  if (tosses < 1) throw std::invalid_argument("empirical_ntoss: N must be >= 1");
  if (trials < 1) throw std::invalid_argument("empirical_ntoss: trials must be >= 1");
  const Coin coin(bias);
  using Partial = std::vector<std::uint64_t>;
  auto partials = run_chunked<Partial>(trials, worker_count, [&](std::uint64_t begin, std::uint64_t end,
                                                                 Partial& out) {
    out.assign(static_cast<std::size_t>(tosses) + 2, 0);
    for (std::uint64_t t = begin; t < end; ++t) {
      Stream stream(random::substream_seed(master_seed, t));
      int a = 0;
      int b = 0;
      int x = 0;
      for (int i = 0; i < tosses; ++i) {
        x += coin.right(stream) ? 1 : -1;
        if (x > b) {
          ++b;
          x = 0;
        } else if (x < -a) {
          ++a;
          x = 0;
        }
      }
      ++out[static_cast<std::size_t>(a + b + 1)];
    }
  });
  std::map<int, std::uint64_t> histogram;
  for (const auto& p : partials) {
    for (std::size_t n = 0; n < p.size(); ++n) {
      if (p[n] != 0) histogram[static_cast<int>(n)] += p[n];
    }
  }
  return histogram;
}

}  // namespace idla::montecarlo
