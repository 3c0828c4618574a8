#include "idla/chain.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "idla/eulerian.hpp"
#include "tridiagonal.hpp"

namespace idla::chain {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

// Walker on the integers between two absorbing sites, -left and +right.
// Returns the interior bands of the first-step system in position order
// (-left+1 .. right-1) with the diagonal set to 1 and the off-diagonals to
// minus the step probabilities.
struct WalkSystem {
  std::vector<Rational> lower, diag, upper;
};

WalkSystem walk_system(int right, int left, const Bias& bias) {
  const auto m = static_cast<std::size_t>(right + left - 1);
  WalkSystem sys{std::vector<Rational>(m, -bias.p_left()), std::vector<Rational>(m, Rational(1)),
                 std::vector<Rational>(m, -bias.p_right())};
  return sys;
}

}  // namespace

Bias::Bias(Rational p_right) : p_right_(std::move(p_right)) {
  require(p_right_ > Rational(0) && p_right_ < Rational(1),
          "bias: p_right must lie strictly between 0 and 1, got " + p_right_.to_string());
}

Rational StateDistribution::at(int label) const {
  const auto it = probabilities.find(label);
  return it == probabilities.end() ? Rational{} : it->second;
}

Rational StateDistribution::total() const {
  Rational sum;
  for (const auto& [label, p] : probabilities) sum += p;
  return sum;
}

TransitionProbs transition_probs(int n, int k) {
  require(n >= 2, "transition_probs: n must be >= 2, got " + std::to_string(n));
  require(k >= 0 && k <= n - 1,
          "transition_probs: k must be in [0, " + std::to_string(n - 1) + "], got " + std::to_string(k));
  TransitionProbs out;
  if (k <= n - 2) out.p = Rational(k + 1, n);
  if (k >= 1) out.q = Rational(n - k, n);
  return out;
}

Rational gambler_win_prob(int k, int l, const Bias& bias) {
  require(k >= 1 && l >= 1, "gambler_win_prob: fortunes must be >= 1");
  auto sys = walk_system(k, l, bias);
  // h(x) = P(hit -l before +k | start x); h(-l) = 1, h(k) = 0.
  std::vector<Rational> rhs(sys.diag.size());
  rhs.front() += bias.p_left();
  const auto h = detail::solve_tridiagonal(sys.lower, sys.diag, sys.upper, rhs);
  return h[static_cast<std::size_t>(l - 1)];
}

Rational expected_exit_time(int a, int b, const Bias& bias) {
  require(a >= 1 && b >= 1, "expected_exit_time: interval bounds must be >= 1");
  auto sys = walk_system(a, b, bias);
  // T(x) = 1 + p T(x+1) + q T(x-1); T(-b) = T(a) = 0.
  std::vector<Rational> rhs(sys.diag.size(), Rational(1));
  const auto t = detail::solve_tridiagonal(sys.lower, sys.diag, sys.upper, rhs);
  return t[static_cast<std::size_t>(b - 1)];
}

Rational escape_time(int a, int b) { return expected_exit_time(a, b, Bias::fair()); }

StateDistribution exact_distribution(int n) {
  require(n >= 1, "exact_distribution: n must be >= 1, got " + std::to_string(n));
  std::vector<Rational> level{Rational(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<Rational> next(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
      const auto t = transition_probs(m, k);
      if (k >= 1) next[k] += t.q * level[k - 1];
      if (k <= m - 2) next[k] += t.p * level[k];
    }
    level = std::move(next);
  }
  StateDistribution out;
  for (int k = 0; k < n; ++k) {
    if (!level[k].is_zero()) out.probabilities.emplace(k, level[k]);
  }
  return out;
}

StateDistribution exact_distribution_biased(int n, const Bias& bias) {
  require(n >= 1, "exact_distribution_biased: n must be >= 1, got " + std::to_string(n));
  std::vector<Rational> level{Rational(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<Rational> next(static_cast<std::size_t>(m));
    for (int j = 0; j <= m - 2; ++j) {
      // From s(m-1, j): the free site on the right is j+1 away, on the left m-1-j.
      const Rational settles_left = gambler_win_prob(j + 1, m - 1 - j, bias);
      next[j] += settles_left * level[j];
      next[j + 1] += (Rational(1) - settles_left) * level[j];
    }
    level = std::move(next);
  }
  StateDistribution out;
  for (int k = 0; k < n; ++k) {
    if (!level[k].is_zero()) out.probabilities.emplace(k, level[k]);
  }
  return out;
}

namespace {

using WalkerMap = std::map<WalkerState, Rational>;

// One toss applied to every state; a walker stepping onto a free site
// settles there and the next particle appears at the origin.
template <typename OnSettle>
WalkerMap toss(const WalkerMap& states, const Bias& bias, OnSettle&& on_settle) {
  WalkerMap next;
  const Rational pr = bias.p_right();
  const Rational pl = bias.p_left();
  for (const auto& [s, mass] : states) {
    for (const auto& [dx, step] : {std::pair{1, pr}, std::pair{-1, pl}}) {
      WalkerState t = s;
      t.x += dx;
      if (t.x == t.b + 1) {
        t = {t.a, t.b + 1, 0};
      } else if (t.x == -t.a - 1) {
        t = {t.a + 1, t.b, 0};
      }
      const Rational moved = mass * step;
      if (t.occupied() != s.occupied() && on_settle(t, moved)) continue;
      next[t] += moved;
    }
  }
  return next;
}

}  // namespace

StateDistribution ntoss_distribution(int tosses, const Bias& bias, int cap) {
  require(tosses >= 0, "ntoss_distribution: N must be >= 0, got " + std::to_string(tosses));
  require(tosses <= cap, "ntoss_distribution: N = " + std::to_string(tosses) + " exceeds cap " +
                             std::to_string(cap));
  WalkerMap states{{WalkerState{}, Rational(1)}};
  for (int i = 0; i < tosses; ++i) {
    states = toss(states, bias, [](const WalkerState&, const Rational&) { return false; });
  }
  StateDistribution out;
  for (const auto& [s, mass] : states) out.probabilities[s.occupied()] += mass;
  return out;
}

SettlementProfile settlement_profile(int target, int horizon, const Bias& bias) {
  require(target >= 1, "settlement_profile: target must be >= 1");
  require(horizon >= 0, "settlement_profile: horizon must be >= 0");
  SettlementProfile out{target, horizon, std::vector<Rational>(static_cast<std::size_t>(target)), {}};
  if (target == 1) {
    out.arrived[0] = 1;
    return out;
  }
  WalkerMap states{{WalkerState{}, Rational(1)}};
  const auto absorb = [&](const WalkerState& s, const Rational& mass) {
    if (s.occupied() < target) return false;
    out.arrived[static_cast<std::size_t>(s.b)] += mass;
    return true;
  };
  for (int i = 0; i < horizon; ++i) states = toss(states, bias, absorb);
  for (const auto& [s, mass] : states) out.pending += mass;
  return out;
}

Rational expected_particle_tosses(int n) {
  require(n >= 2, "expected_particle_tosses: n must be >= 2, got " + std::to_string(n));
  const auto before = exact_distribution(n - 1);
  Rational sum;
  for (const auto& [j, p] : before.probabilities) sum += p * escape_time(j + 1, n - 1 - j);
  return sum;
}

Rational expected_total_tosses(int n) {
  require(n >= 1, "expected_total_tosses: n must be >= 1, got " + std::to_string(n));
  Rational total;
  for (int m = 2; m <= n; ++m) total += expected_particle_tosses(m);
  return total;
}

std::string to_string(RhoOrientation orientation) {
  switch (orientation) {
    case RhoOrientation::kRightOverLeft: return "rho=p_right/p_left";
    case RhoOrientation::kLeftOverRight: return "rho=p_left/p_right";
    case RhoOrientation::kBoth: return "both";
    case RhoOrientation::kNeither: return "neither";
  }
  return "unknown";
}

OrientationReport resolve_rho_orientation(int max_n, std::span<const Bias> biases) {
  require(max_n >= 1 && max_n <= eulerian::kMaxBruteForceN, "resolve_rho_orientation: max_n out of range");
  OrientationReport report;
  for (int n = 1; n <= max_n; ++n) {
    const auto row = eulerian::q_eulerian_row(n);
    for (const auto& bias : biases) {
      const auto dist = exact_distribution_biased(n, bias);
      const auto matches = [&](const Rational& rho) {
        const auto weights = row.evaluate(rho);
        const Rational norm = eulerian::q_factorial(n, rho);
        for (int k = 0; k < n; ++k) {
          if (dist.at(k) != weights[k] / norm) return false;
        }
        return true;
      };
      ++report.cases_checked;
      report.right_over_left_matches += matches(bias.rho());
      report.left_over_right_matches += matches(bias.rho().reciprocal());
    }
  }
  const bool right = report.right_over_left_matches == report.cases_checked;
  const bool left = report.left_over_right_matches == report.cases_checked;
  report.orientation = right && left ? RhoOrientation::kBoth
                       : right       ? RhoOrientation::kRightOverLeft
                       : left        ? RhoOrientation::kLeftOverRight
                                     : RhoOrientation::kNeither;
  std::ostringstream os;
  os << "rho=p_right/p_left matched " << report.right_over_left_matches << "/" << report.cases_checked
     << ", rho=p_left/p_right matched " << report.left_over_right_matches << "/" << report.cases_checked
     << " (k counts sites right of the origin); resolved: " << to_string(report.orientation);
  report.summary = os.str();
  return report;
}

}  // namespace idla::chain
