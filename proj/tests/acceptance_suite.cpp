// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "idla/algebra/binomial.hpp"
#include "idla/chain.hpp"
#include "idla/cli/app.hpp"
#include "idla/eulerian.hpp"
#include "idla/montecarlo.hpp"
#include "idla/runtime.hpp"
#include "idla/stats.hpp"

namespace {

using idla::algebra::BigInt;
using idla::algebra::Rational;
using idla::chain::Bias;

struct Verdict {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Verdict eulerian_law() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= 12; ++n) {
    const auto dist = idla::chain::exact_distribution(n);
    const auto row = idla::eulerian::eulerian_row(n);
    const Rational fact(idla::algebra::factorial(n));
    for (int k = 0; k < n; ++k) {
      const Rational scaled = dist.at(k) * fact;
      if (!scaled.is_integer() || scaled.numerator() != row.entries[k]) {
        v.fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + scaled.to_string());
      }
    }
  }
  for (int n = 1; n <= 8; ++n) {
    if (idla::eulerian::eulerian_row(n) != idla::eulerian::eulerian_row_brute(n)) {
      v.fail("brute force differs at n=" + std::to_string(n));
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 5.0) v.fail("took " + std::to_string(elapsed) + " s");
  if (v.passed) v.detail = "n<=12 exact; brute force n<=8; " + std::to_string(elapsed) + " s";
  return v;
}

Verdict eulerian_table() {
  Verdict v;
  const std::vector<std::vector<long>> rows{{1}, {1, 1}, {1, 4, 1}, {1, 11, 11, 1}, {1, 26, 66, 26, 1},
                                            {1, 57, 302, 302, 57, 1}};
  for (int n = 1; n <= 6; ++n) {
    std::vector<BigInt> expected;
    for (long x : rows[n - 1]) expected.emplace_back(x);
    if (idla::eulerian::eulerian_row(n).entries != expected) v.fail("row n=" + std::to_string(n));
  }
  if (v.passed) v.detail = "rows 1..6 exact";
  return v;
}

Verdict escape_time() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  for (int a = 1; a <= 12; ++a) {
    for (int b = 1; b <= 12; ++b) {
      if (idla::chain::escape_time(a, b) != Rational(a * b)) {
        v.fail("a=" + std::to_string(a) + " b=" + std::to_string(b));
      }
    }
  }
  // five occupied sites: (k, l) = (1,5), (2,4), (3,3), (4,2), (5,1)
  const int chart[] = {5, 8, 9, 8, 5};
  for (int j = 0; j < 5; ++j) {
    if (idla::chain::escape_time(j + 1, 5 - j) != Rational(chart[j])) v.fail("chart row " + std::to_string(j));
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 1.0) v.fail("took " + std::to_string(elapsed) + " s");
  if (v.passed) v.detail = "a,b<=12 exact; chart 5,8,9,8,5; " + std::to_string(elapsed) + " s";
  return v;
}

Verdict expected_tosses() {
  Verdict v;
  std::vector<int> bad;
  for (int n = 1; n <= 30; ++n) {
    if (idla::chain::expected_total_tosses(n) != idla::runtime::closed_form_E(n)) bad.push_back(n);
  }
  for (int n : bad) {
    v.fail("n=" + std::to_string(n) + ": engine " + idla::chain::expected_total_tosses(n).to_string() +
           " vs closed form " + idla::runtime::closed_form_E(n).to_string());
  }
  if (idla::chain::expected_total_tosses(6) - idla::chain::expected_total_tosses(5) != Rational(17, 2)) {
    v.fail("delta E_6 != 17/2");
  }
  const std::vector<std::pair<int, double>> table{{3, 3.00},   {4, 6.66},   {5, 12.49}, {6, 20.98},
                                                  {7, 32.64},  {8, 47.96},  {9, 67.54}, {10, 91.68},
                                                  {15, 300.24}, {20, 699.79}};
  for (const auto& [n, value] : table) {
    const double closed = idla::runtime::closed_form_E(n).to_double();
    if (std::abs(value - closed) > 0.01 * closed) v.fail("table value at n=" + std::to_string(n));
  }
  if (v.passed) v.detail = "n<=30 exact; delta E_6 = 17/2; table within 1%";
  else v.detail += " (" + std::to_string(bad.size()) + " of 30 n fail)";
  return v;
}

Verdict ntoss_array() {
  Verdict v;
  const std::vector<std::vector<long>> printed{{1}, {1, 1}, {1, 3}, {1, 4, 3}, {1, 9, 6}, {1, 10, 18, 3}, {1, 21, 32, 10}};
  int disagreements = 0;
  for (int N = 1; N <= 7; ++N) {
    const auto d = idla::chain::ntoss_distribution(N, Bias::fair());
    const Rational scale{BigInt(BigInt(1) << (N - 1))};
    const auto& row = printed[N - 1];
    if (d.probabilities.size() != row.size()) v.fail("N=" + std::to_string(N) + " support size");
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Rational cell = d.at(static_cast<int>(i) + 2) * scale;
      if (cell != Rational(row[i])) {
        ++disagreements;
        v.fail("N=" + std::to_string(N) + " n=" + std::to_string(i + 2) + ": engine " + cell.to_string() +
               " vs printed " + std::to_string(row[i]));
      }
    }
  }
  for (int n = 2; n <= 8; ++n) {
    const int first = ((n + 1) / 2) * (n / 2);
    for (int N = 0; N <= first; ++N) {
      const bool reached = idla::chain::ntoss_distribution(N, Bias::fair()).at(n) > Rational(0);
      if (reached != (N == first)) v.fail("first-nonzero law at n=" + std::to_string(n));
    }
  }
  if (v.passed) v.detail = "N=1..7 exact, " + std::to_string(disagreements) + " printed cells disagree; first-nonzero n<=8";
  return v;
}

Verdict biased_distribution() {
  Verdict v;
  const std::vector<Bias> biases{Bias(Rational(1, 2)), Bias(Rational(2, 3)), Bias(Rational(1, 4))};
  const auto report = idla::chain::resolve_rho_orientation(7, biases);
  if (report.orientation != idla::chain::RhoOrientation::kRightOverLeft &&
      report.orientation != idla::chain::RhoOrientation::kLeftOverRight) {
    v.fail("orientation unresolved: " + report.summary);
    return v;
  }
  const bool right_over_left = report.orientation == idla::chain::RhoOrientation::kRightOverLeft;
  for (const Bias& bias : biases) {
    const Rational rho = right_over_left ? bias.rho() : Rational(1) / bias.rho();
    for (int n = 1; n <= 7; ++n) {
      const auto dist = idla::chain::exact_distribution_biased(n, bias);
      const auto row = idla::eulerian::q_eulerian_row(n).evaluate(rho);
      const Rational norm = idla::eulerian::q_factorial(n, rho);
      for (int k = 0; k < n; ++k) {
        if (dist.at(k) != row[k] / norm) {
          v.fail("p=" + bias.p_right().to_string() + " n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
      if (bias.is_fair() && dist != idla::chain::exact_distribution(n)) v.fail("fair mismatch at n=" + std::to_string(n));
    }
  }
  if (v.passed) v.detail = to_string(report.orientation) + "; n<=7 exact for p in {1/2, 2/3, 1/4}";
  return v;
}

Verdict generating_functions() {
  Verdict v;
  const auto report = idla::runtime::delta_series_report(30);
  if (!report.passed) v.fail("delta series: " + report.failure);
  const auto series = idla::runtime::delta_series(3);
  if (series[1] != Rational(1) || series[2] != Rational(2) || series[3] != Rational(11, 3)) {
    v.fail("low-order coefficients");
  }
  for (const Rational x : {Rational(0), Rational(2), Rational(1, 2), Rational(-1), Rational(3, 4)}) {
    if (!idla::runtime::univariate_egf_check(x, 10)) v.fail("EGF at x=" + x.to_string());
  }
  if (idla::runtime::mixed_partial_weighted_sum(6) != Rational(1020)) v.fail("mixed partial at n=6");
  if (v.passed) v.detail = "delta series order 30 (1, 2, 11/3); EGF at 5 points order 10; mixed partial 1020";
  return v;
}

Verdict monte_carlo() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  constexpr std::uint64_t kTrials = 100000;
  const std::uint64_t seeds[] = {1, 2, 3};
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());

  std::ostringstream chi_log;
  for (int n = 3; n <= 7; ++n) {
    const auto exact = idla::chain::exact_distribution(n);
    std::vector<double> p;
    for (int k = 0; k < n; ++k) p.push_back(exact.at(k).to_double());
    int chi_passes = 0;
    for (std::uint64_t seed : seeds) {
      idla::montecarlo::SimConfig config{
          .n_particles = n, .trials = kTrials, .bias = Bias::fair(), .master_seed = seed, .worker_count = workers};
      const auto s = idla::montecarlo::run_trials(config);
      for (int k = 0; k < n; ++k) {
        const double freq = static_cast<double>(s.counts_by_k[k]) / kTrials;
        const double bound = 5.0 * std::sqrt(p[k] * (1 - p[k]) / kTrials);
        if (std::abs(freq - p[k]) > bound) {
          v.fail("cell n=" + std::to_string(n) + " k=" + std::to_string(k) + " seed=" + std::to_string(seed));
        }
      }
      const auto fit = idla::stats::chi_square(s.counts_by_k, p, kTrials);
      const double threshold = idla::stats::chi_square_threshold(fit.degrees_of_freedom);
      if (fit.chi_square_statistic < threshold) ++chi_passes;
    }
    chi_log << " n" << n << ":" << chi_passes << "/3";
    if (chi_passes < 2) v.fail("chi-square at n=" + std::to_string(n) + " passed " + std::to_string(chi_passes) + "/3");
  }

  const std::pair<int, double> targets[] = {{10, 91.67}, {15, 300.0}, {20, 700.0}};
  std::ostringstream mean_log;
  for (const auto& [n, target] : targets) {
    for (std::uint64_t seed : seeds) {
      idla::montecarlo::SimConfig config{
          .n_particles = n, .trials = kTrials, .bias = Bias::fair(), .master_seed = seed, .worker_count = workers};
      const auto s = idla::montecarlo::run_trials(config);
      const double z = (s.mean_tosses - target) / s.mean_standard_error();
      if (std::abs(z) > 3.0) {
        v.fail("mean at n=" + std::to_string(n) + " seed=" + std::to_string(seed) + " is " +
               std::to_string(z) + " SE off");
      }
      mean_log << " " << n << "/" << seed << ":" << std::round(z * 100) / 100;
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 60.0) v.fail("took " + std::to_string(elapsed) + " s");
  if (v.passed) {
    v.detail = "seeds 1,2,3; chi-square" + chi_log.str() + "; mean z" + mean_log.str() + "; " +
               std::to_string(elapsed) + " s";
  }
  return v;
}

Verdict determinism() {
  Verdict v;
  for (const std::string format : {"csv", "json"}) {
    std::vector<std::string> outputs;
    for (const std::string workers : {"1", "4"}) {
      std::ostringstream out, err;
      const int code = idla::cli::run({"simulate", "--n", "7", "--trials", "20000", "--seed", "12345", "--workers",
                                       workers, "--format", format},
                                      out, err);
      if (code != 0) v.fail("simulate exited " + std::to_string(code) + ": " + err.str());
      outputs.push_back(out.str());
    }
    if (outputs[0] != outputs[1]) v.fail(format + " envelopes differ between 1 and 4 workers");
  }
  if (v.passed) v.detail = "csv and json envelopes byte-identical for --workers 1 and 4";
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    const char* tolerance;
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "Eulerian law for the fair game", "exact; < 5 s", eulerian_law},
      {2, "Eulerian triangle rows 1..6", "exact", eulerian_table},
      {3, "Escape time a*b", "exact; < 1 s", escape_time},
      {4, "Expected total tosses n^3/12 + n^2/12", "exact for 1<=n<=30; table within 1%", expected_tosses},
      {5, "N-toss array and first-nonzero law", "exact", ntoss_array},
      {6, "Biased distribution via q-Eulerian row", "exact", biased_distribution},
      {7, "Generating functions", "exact", generating_functions},
      {8, "Monte Carlo agreement", "5 sigma per cell; chi-square < WH(1e-3) for 2/3 seeds; mean within 3 SE; < 60 s",
       monte_carlo},
      {9, "Determinism across worker counts", "byte-identical", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (!v.passed) ++failures;
    std::printf("%s [%d] %s (tolerance: %s): %s\n", v.passed ? "PASS" : "FAIL", c.id, c.name, c.tolerance,
                v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
