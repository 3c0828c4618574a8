#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "idla/algebra/rational.hpp"

namespace idla::chain {

using algebra::Rational;

/// Default ceiling on the number of tosses accepted by ntoss_distribution.
inline constexpr int kDefaultNtossCap = 16;

/// s(n,k): n occupied sites, k of them strictly right of the origin.
struct MacroState {
  int n = 1;
  int k = 0;

  int left() const { return n - 1 - k; }
  friend auto operator<=>(const MacroState&, const MacroState&) = default;
};

/// Occupied interval [-a, b] plus the position x of the walking particle.
struct WalkerState {
  int a = 0;
  int b = 0;
  int x = 0;

  int occupied() const { return a + b + 1; }
  friend auto operator<=>(const WalkerState&, const WalkerState&) = default;
};

/// Probability that a step goes right. rho = p_right / p_left.
class Bias {
 public:
  /// Throws std::invalid_argument unless 0 < p_right < 1.
  explicit Bias(Rational p_right);
  static Bias fair() { return Bias(Rational(1, 2)); }

  const Rational& p_right() const { return p_right_; }
  Rational p_left() const { return Rational(1) - p_right_; }
  Rational rho() const { return p_right_ / p_left(); }
  bool is_fair() const { return p_right_ == Rational(1, 2); }

  friend bool operator==(const Bias&, const Bias&) = default;

 private:
  Rational p_right_;
};

/// Exact distribution over integer labels (k for macro states, occupied
/// count for N-toss results). Labels with probability zero are not stored.
struct StateDistribution {
  std::map<int, Rational> probabilities;

  Rational at(int label) const;
  Rational total() const;
  friend bool operator==(const StateDistribution&, const StateDistribution&) = default;
};

/// p = p_{n,k}: s(n-1,k) -> s(n,k) (the new site is on the left).
/// q = q_{n,k}: s(n-1,k-1) -> s(n,k) (the new site is on the right).
/// An edge whose source state does not exist has probability zero.
struct TransitionProbs {
  Rational p;
  Rational q;
};

/// Fair-coin transition probabilities into s(n,k). Requires n >= 2 and
/// 0 <= k <= n-1; throws std::invalid_argument otherwise.
TransitionProbs transition_probs(int n, int k);

/// Gambler's ruin: A holds k, B holds l, A wins a dollar on each left step.
/// Returns the probability that A takes everything, i.e. the walker started
/// at 0 reaches -l before +k. Solved from the first-step equations.
Rational gambler_win_prob(int k, int l, const Bias& bias);

/// Expected number of fair tosses for a walker at 0 to leave (-b, a).
Rational escape_time(int a, int b);

/// Same, for an arbitrary bias.
Rational expected_exit_time(int a, int b, const Bias& bias);

/// P(n, k) by dynamic programming down the state lattice (fair coin).
StateDistribution exact_distribution(int n);

/// P(n, k) for a biased coin; every transition comes from gambler_win_prob.
StateDistribution exact_distribution_biased(int n, const Bias& bias);

/// Distribution of the occupied-site count after exactly N tosses.
/// Throws std::invalid_argument if N < 0 or N > cap.
StateDistribution ntoss_distribution(int tosses, const Bias& bias, int cap = kDefaultNtossCap);

/// First-arrival profile at `target` occupied sites after `horizon` tosses.
/// arrived[k] is the probability that the walk has reached `target` sites
/// with k of them right of the origin; `pending` is the mass still below.
struct SettlementProfile {
  int target = 0;
  int horizon = 0;
  std::vector<Rational> arrived;
  Rational pending;
};

SettlementProfile settlement_profile(int target, int horizon, const Bias& bias);

/// E_n via the per-particle sum: E_1 = 0, and each later particle adds
/// sum_k P(m-1, k-1) * escape_time(k, m-k).
Rational expected_total_tosses(int n);

/// Expected tosses for the n-th particle given n-1 occupied sites.
/// Requires n >= 2.
Rational expected_particle_tosses(int n);

enum class RhoOrientation { kRightOverLeft, kLeftOverRight, kBoth, kNeither };

std::string to_string(RhoOrientation orientation);

struct OrientationReport {
  RhoOrientation orientation = RhoOrientation::kNeither;
  int cases_checked = 0;
  int right_over_left_matches = 0;
  int left_over_right_matches = 0;
  std::string summary;
};

/// Compares exact_distribution_biased(n, bias) with [n]!^-1 times the
/// descent/major-index row at rho = p/q and at rho = q/p, over n = 1..max_n.
OrientationReport resolve_rho_orientation(int max_n, std::span<const Bias> biases);

}  // namespace idla::chain
