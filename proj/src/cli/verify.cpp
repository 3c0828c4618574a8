#include "idla/cli/verify.hpp"

#include <array>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "idla/algebra/binomial.hpp"
#include "idla/chain.hpp"
#include "idla/eulerian.hpp"
#include "idla/random.hpp"
#include "idla/runtime.hpp"

namespace idla::cli {
namespace {

using algebra::BigInt;
using algebra::Rational;

// A check body returns an empty string on success, or a counterexample.
using Body = std::function<std::string()>;

struct Check {
  std::string name;
  Body body;
  std::string note;
  // Filled in by the body when the note depends on what it computed.
  std::shared_ptr<std::string> live_note = nullptr;
};

std::string row_text(const std::vector<BigInt>& row) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < row.size(); ++i) os << (i ? ", " : "") << row[i].get_str();
  os << "]";
  return os.str();
}

std::vector<Check> eulerian_checks() {
  std::vector<Check> checks;
  checks.push_back({"recurrence matches permutation count (n<=8)", [] {
                      for (int n = 1; n <= 8; ++n) {
                        const auto rec = eulerian::eulerian_row(n);
                        const auto brute = eulerian::eulerian_row_brute(n);
                        if (rec != brute) {
                          return "n=" + std::to_string(n) + ": " + row_text(rec.entries) + " vs " +
                                 row_text(brute.entries);
                        }
                      }
                      return std::string{};
                    }, ""});
  checks.push_back({"row symmetry and sum n! (n<=25)", [] {
                      for (int n = 1; n <= 25; ++n) {
                        const auto row = eulerian::eulerian_row(n);
                        BigInt sum = 0;
                        for (int k = 0; k < n; ++k) {
                          if (row.entries[k] != row.entries[n - 1 - k]) {
                            return "n=" + std::to_string(n) + " asymmetric at k=" + std::to_string(k);
                          }
                          sum += row.entries[k];
                        }
                        if (sum != algebra::factorial(n)) return "n=" + std::to_string(n) + " sums to " + sum.get_str();
                      }
                      return std::string{};
                    }, ""});
  checks.push_back({"A_n(s,t) == t^(n+1) A_n(s/t) at random rational points (n<=10)", [] {
                      random::SplitMix64 rng(20240611);
                      const auto draw = [&](bool nonzero) {
                        for (;;) {
                          const long num = static_cast<long>(rng() % 19) - 9;
                          const long den = static_cast<long>(rng() % 9) + 1;
                          if (!nonzero || num != 0) return Rational(num, den);
                        }
                      };
                      for (int n = 1; n <= 10; ++n) {
                        const auto bi = eulerian::bivariate_polynomial(n);
                        const auto uni = eulerian::eulerian_polynomial(n);
                        for (int i = 0; i < 10; ++i) {
                          const Rational s = draw(false);
                          const Rational t = draw(true);
                          const Rational lhs = bi.evaluate(s, t);
                          const Rational rhs = t.pow(static_cast<unsigned>(n + 1)) * uni.evaluate(s / t);
                          if (lhs != rhs) {
                            return "n=" + std::to_string(n) + " at (" + s.to_string() + ", " + t.to_string() + ")";
                          }
                        }
                      }
                      return std::string{};
                    }, ""});
  checks.push_back({"A_5(s,t) coefficient of s^4 t^2 is 26", [] {
                      const auto c = eulerian::bivariate_polynomial(5).coefficient(4, 2);
                      return c == Rational(26) ? std::string{} : "got " + c.to_string();
                    }, "the printed example shows 11; row symmetry forces 26"});
  checks.push_back({"q-row at rho=1 is the Eulerian row (n<=8)", [] {
                      for (int n = 1; n <= 8; ++n) {
                        const auto values = eulerian::q_eulerian_row(n).evaluate(1);
                        const auto row = eulerian::eulerian_row(n);
                        for (int k = 0; k < n; ++k) {
                          if (values[k] != Rational(row.entries[k])) {
                            return "n=" + std::to_string(n) + " k=" + std::to_string(k);
                          }
                        }
                      }
                      return std::string{};
                    }, ""});
  checks.push_back({"q-row sum equals [n]! (n<=7, rho in {1,2,1/2,3/5})", [] {
                      const std::array<Rational, 4> rhos{Rational(1), Rational(2), Rational(1, 2), Rational(3, 5)};
                      for (int n = 1; n <= 7; ++n) {
                        const auto row = eulerian::q_eulerian_row(n);
                        for (const auto& rho : rhos) {
                          Rational sum;
                          for (const auto& v : row.evaluate(rho)) sum += v;
                          if (sum != eulerian::q_factorial(n, rho)) {
                            return "n=" + std::to_string(n) + " rho=" + rho.to_string();
                          }
                        }
                      }
                      return std::string{};
                    }, ""});
  return checks;
}

std::vector<Check> genfun_checks() {
  std::vector<Check> checks;
  checks.push_back({"delta series check at order 30", [] {
                      return runtime::delta_series_report(30).failure;
                    }, "coefficients 1, 2, 11/3, ... match n^2/4 + 5n/12 + 1/6"});
  checks.push_back({"univariate EGF check at order 10", [] {
                      const std::array<Rational, 5> xs{Rational(0), Rational(2), Rational(1, 2), Rational(-1),
                                                       Rational(3, 4)};
                      for (const auto& x : xs) {
                        if (!runtime::univariate_egf_check(x, 10)) return "x=" + x.to_string();
                      }
                      return std::string{};
                    }, "x in {0, 2, 1/2, -1, 3/4}"});
  checks.push_back({"mixed partial of A_5 at (1,1) is 1020", [] {
                      const auto v = runtime::mixed_partial_weighted_sum(6);
                      return v == Rational(1020) ? std::string{} : "got " + v.to_string();
                    }, ""});
  checks.push_back({"mixed partial == (n-1)! * weighted sum (3<=n<=12)", [] {
                      for (int n = 3; n <= 12; ++n) {
                        const auto lhs = runtime::mixed_partial_weighted_sum(n);
                        const auto rhs = Rational(algebra::factorial(n - 1)) * runtime::corollary_weighted_sum(n);
                        if (lhs != rhs) return "n=" + std::to_string(n);
                      }
                      return std::string{};
                    }, ""});
  checks.push_back({"weighted sum == n^2/4 - n/12 (3<=n<=25)", [] {
                      for (int n = 3; n <= 25; ++n) {
                        const auto lhs = runtime::corollary_weighted_sum(n);
                        const auto rhs = runtime::closed_form_delta_E(n);
                        if (lhs != rhs) return "n=" + std::to_string(n) + ": " + lhs.to_string() + " vs " + rhs.to_string();
                      }
                      return std::string{};
                    }, ""});
  checks.push_back({"closed E first differences (2<=n<=100)", [] {
                      for (int n = 2; n <= 100; ++n) {
                        if (runtime::closed_form_E(n) - runtime::closed_form_E(n - 1) != runtime::closed_form_delta_E(n)) {
                          return "n=" + std::to_string(n);
                        }
                      }
                      return std::string{};
                    }, ""});
  return checks;
}

// Reference N-toss array scaled by 2^(N-1); index [N-1] lists n = 2, 3, ...
const std::vector<std::vector<long>>& printed_ntoss_rows() {
  static const std::vector<std::vector<long>> rows{
      {1}, {1, 1}, {1, 3}, {1, 4, 3}, {1, 9, 6}, {1, 10, 18, 3}, {1, 21, 32, 10}};
  return rows;
}

std::vector<Check> chain_checks() {
  std::vector<Check> checks;
  checks.push_back({"P(n,k) * n! equals the Eulerian row (n<=12)", [] {
                      for (int n = 1; n <= 12; ++n) {
                        const auto dist = chain::exact_distribution(n);
                        const auto row = eulerian::eulerian_row(n);
                        const Rational nf(algebra::factorial(n));
                        for (int k = 0; k < n; ++k) {
                          if (dist.at(k) * nf != Rational(row.entries[k])) {
                            return "n=" + std::to_string(n) + " k=" + std::to_string(k);
                          }
                        }
                        if (dist.total() != Rational(1)) return "n=" + std::to_string(n) + " does not sum to 1";
                      }
                      return std::string{};
                    }, ""});
  checks.push_back({"escape time == a*b (1<=a,b<=12)", [] {
                      for (int a = 1; a <= 12; ++a) {
                        for (int b = 1; b <= 12; ++b) {
                          const auto t = chain::escape_time(a, b);
                          if (t != Rational(a * b)) {
                            return "a=" + std::to_string(a) + " b=" + std::to_string(b) + ": " + t.to_string();
                          }
                        }
                      }
                      return std::string{};
                    }, ""});
  checks.push_back({"fair gambler's ruin == k/(k+l) (1<=k,l<=12)", [] {
                      for (int k = 1; k <= 12; ++k) {
                        for (int l = 1; l <= 12; ++l) {
                          if (chain::gambler_win_prob(k, l, chain::Bias::fair()) != Rational(k, k + l)) {
                            return "k=" + std::to_string(k) + " l=" + std::to_string(l);
                          }
                        }
                      }
                      return std::string{};
                    }, ""});
  checks.push_back({"expected total tosses: E_1 = 0 and E_n = n^3/12 + n^2/12 (2<=n<=30)", [] {
                      if (!chain::expected_total_tosses(1).is_zero()) return std::string("E_1 != 0");
                      for (const auto& row : runtime::runtime_table(30)) {
                        if (!row.agreement) return "n=" + std::to_string(row.n) + ": " + row.E_n.to_string();
                      }
                      return std::string{};
                    }, "the closed form gives 1/6 at n=1, where no toss is made"});
  checks.push_back({"N-toss array matches the printed rows (N<=7)", [] {
                      const auto& printed = printed_ntoss_rows();
                      for (int big_n = 1; big_n <= 7; ++big_n) {
                        const auto dist = chain::ntoss_distribution(big_n, chain::Bias::fair());
                        const Rational scale = Rational(2).pow(static_cast<unsigned>(big_n - 1));
                        const auto& expect = printed[big_n - 1];
                        for (std::size_t i = 0; i < expect.size(); ++i) {
                          const int n = static_cast<int>(i) + 2;
                          if (dist.at(n) * scale != Rational(expect[i])) {
                            return "N=" + std::to_string(big_n) + " n=" + std::to_string(n) + ": exact " +
                                   (dist.at(n) * scale).to_string() + ", printed " + std::to_string(expect[i]);
                          }
                        }
                        if (dist.probabilities.size() != expect.size()) return "N=" + std::to_string(big_n) + " support size";
                      }
                      return std::string{};
                    }, ""});
  checks.push_back({"N-toss denominators divide 2^(N-1) (N<=16)", [] {
                      for (int big_n = 1; big_n <= 16; ++big_n) {
                        const auto dist = chain::ntoss_distribution(big_n, chain::Bias::fair());
                        const BigInt bound = BigInt(1) << (big_n - 1);
                        for (const auto& [n, p] : dist.probabilities) {
                          if (bound % p.denominator() != 0) return "N=" + std::to_string(big_n) + " n=" + std::to_string(n);
                        }
                        if (dist.total() != Rational(1)) return "N=" + std::to_string(big_n) + " does not sum to 1";
                      }
                      return std::string{};
                    }, ""});
  checks.push_back({"first N with n occupied is ceil(n/2)*floor(n/2) (n<=8)", [] {
                      for (int n = 1; n <= 8; ++n) {
                        const int expected = ((n + 1) / 2) * (n / 2);
                        int first = -1;
                        for (int big_n = 0; big_n <= chain::kDefaultNtossCap && first < 0; ++big_n) {
                          if (!chain::ntoss_distribution(big_n, chain::Bias::fair()).at(n).is_zero()) first = big_n;
                        }
                        if (first != expected) {
                          return "n=" + std::to_string(n) + ": first N " + std::to_string(first) + ", law " +
                                 std::to_string(expected);
                        }
                      }
                      return std::string{};
                    }, ""});
  checks.push_back({"first arrivals at n sites bracket P(n,k) (n<=6)", [] {
                      for (int n = 1; n <= 6; ++n) {
                        const auto profile = chain::settlement_profile(n, 240, chain::Bias::fair());
                        const auto dist = chain::exact_distribution(n);
                        for (int k = 0; k < n; ++k) {
                          const auto& got = profile.arrived[k];
                          if (got > dist.at(k) || got + profile.pending < dist.at(k)) {
                            return "n=" + std::to_string(n) + " k=" + std::to_string(k);
                          }
                        }
                        if (profile.pending > Rational(1, 1000000)) return "n=" + std::to_string(n) + " horizon too short";
                      }
                      return std::string{};
                    }, "horizon 240 tosses"});
  return checks;
}

std::vector<Check> biased_checks() {
  std::vector<Check> checks;
  checks.push_back({"biased lattice at p=1/2 equals the fair distribution (n<=10)", [] {
                      for (int n = 1; n <= 10; ++n) {
                        if (chain::exact_distribution_biased(n, chain::Bias::fair()) != chain::exact_distribution(n)) {
                          return "n=" + std::to_string(n);
                        }
                      }
                      return std::string{};
                    }, ""});
  auto orientation_note = std::make_shared<std::string>();
  checks.push_back({"rho orientation for the major-index refinement (n<=7, p in {2/3, 1/4})", [orientation_note] {
                      const std::array<chain::Bias, 2> biases{chain::Bias(Rational(2, 3)), chain::Bias(Rational(1, 4))};
                      const auto report = chain::resolve_rho_orientation(7, biases);
                      *orientation_note = report.summary;
                      if (report.orientation != chain::RhoOrientation::kRightOverLeft) return report.summary;
                      return std::string{};
                    }, "", orientation_note});
  checks.push_back({"biased gambler's ruin equals [k]/[k+l] at rho = p_right/p_left", [] {
                      for (const auto& p : {Rational(2, 3), Rational(1, 4), Rational(3, 5)}) {
                        const chain::Bias bias(p);
                        const Rational rho = bias.rho();
                        for (int k = 1; k <= 8; ++k) {
                          for (int l = 1; l <= 8; ++l) {
                            const Rational closed = eulerian::q_integer(k, rho) / eulerian::q_integer(k + l, rho);
                            if (chain::gambler_win_prob(k, l, bias) != closed) {
                              return "p=" + p.to_string() + " k=" + std::to_string(k) + " l=" + std::to_string(l);
                            }
                          }
                        }
                      }
                      return std::string{};
                    }, "same orientation as the major-index refinement"});
  return checks;
}

std::vector<CheckResult> run_checks(const std::string& suite, const std::vector<Check>& checks) {
  std::vector<CheckResult> results;
  for (const auto& check : checks) {
    CheckResult r{suite, check.name, false, {}};
    try {
      const auto failure = check.body();
      r.passed = failure.empty();
      r.detail = r.passed ? (check.live_note ? *check.live_note : check.note) : failure;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"eulerian", "genfun", "chain", "biased"};
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite) {
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& name : suite_names()) {
      auto part = run_suite(name);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "eulerian") return run_checks("eulerian", eulerian_checks());
  if (suite == "genfun") return run_checks("genfun", genfun_checks());
  if (suite == "chain") return run_checks("chain", chain_checks());
  if (suite == "biased") return run_checks("biased", biased_checks());
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace idla::cli
