#include "idla/cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "idla/chain.hpp"
#include "idla/cli/envelope.hpp"
#include "idla/cli/verify.hpp"
#include "idla/montecarlo.hpp"
#include "idla/runtime.hpp"
#include "idla/stats.hpp"

namespace idla::cli {
namespace {

using algebra::Rational;

// Raised for argument values that parse but make no sense.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "csv";

  int n = 0;
  std::optional<std::string> bias;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  int max_n = 0;
  int max_tosses = 0;
  std::string suite = "all";
};

Format parse_format(const std::string& text) { return text == "json" ? Format::kJson : Format::kCsv; }

chain::Bias parse_bias(const std::optional<std::string>& text) {
  if (!text) return chain::Bias::fair();
  try {
    return chain::Bias(Rational::parse(*text));
  } catch (const std::exception& e) {
    throw UsageError(std::string("--bias: ") + e.what());
  }
}

int ntoss_cap() {
  const char* env = std::getenv(kNtossCapEnv);
  if (env == nullptr || *env == '\0') return chain::kDefaultNtossCap;
  try {
    std::size_t used = 0;
    const int cap = std::stoi(env, &used);
    if (used != std::string(env).size() || cap < 1) throw std::invalid_argument("bad value");
    return cap;
  } catch (const std::exception&) {
    throw UsageError(std::string(kNtossCapEnv) + " must be a positive integer, got '" + env + "'");
  }
}

Field approx(const Rational& r) { return Field::decimal(r.to_double()); }

std::vector<double> as_doubles(const chain::StateDistribution& dist, int cells) {
  std::vector<double> out(static_cast<std::size_t>(cells));
  for (int k = 0; k < cells; ++k) out[k] = dist.at(k).to_double();
  return out;
}

OutputEnvelope exact_dist(const Options& opt) {
  if (opt.n < 1) throw UsageError("--n must be >= 1");
  const auto bias = parse_bias(opt.bias);
  const auto dist = opt.bias ? chain::exact_distribution_biased(opt.n, bias) : chain::exact_distribution(opt.n);

  OutputEnvelope env;
  env.command = "exact-dist";
  env.parameters = {{"n", std::to_string(opt.n)}, {"bias", bias.p_right().to_string()}};
  env.columns = {"k", "probability", "approx"};
  for (int k = 0; k < opt.n; ++k) {
    const Rational p = dist.at(k);
    env.rows.push_back({Field::integer(k), Field::rational(p), approx(p)});
  }
  return env;
}

OutputEnvelope simulate(const Options& opt) {
  if (opt.n < 1) throw UsageError("--n must be >= 1");
  if (opt.trials < 1) throw UsageError("--trials must be >= 1");
  if (opt.workers < 1) throw UsageError("--workers must be >= 1");
  const auto bias = parse_bias(opt.bias);

  montecarlo::SimConfig config;
  config.n_particles = opt.n;
  config.trials = opt.trials;
  config.bias = bias;
  config.master_seed = opt.seed;
  config.worker_count = opt.workers;
  const auto summary = montecarlo::run_trials(config);

  const auto exact = bias.is_fair() ? chain::exact_distribution(opt.n) : chain::exact_distribution_biased(opt.n, bias);
  const auto exact_d = as_doubles(exact, opt.n);
  const auto fit = stats::chi_square(summary.counts_by_k, exact_d, summary.trials);

  OutputEnvelope env;
  env.command = "simulate";
  // Worker count is a performance knob and deliberately left out.
  env.parameters = {{"n", std::to_string(opt.n)},
                    {"trials", std::to_string(opt.trials)},
                    {"seed", std::to_string(opt.seed)},
                    {"bias", bias.p_right().to_string()}};
  env.summary = {
      {"sse", Field::decimal(fit.sse)},
      {"chi_square", Field::decimal(fit.chi_square_statistic)},
      {"degrees_of_freedom", Field::integer(fit.degrees_of_freedom)},
      {"chi_square_threshold",
       fit.degrees_of_freedom >= 1 ? Field::decimal(stats::chi_square_threshold(fit.degrees_of_freedom)) : Field::null()},
      {"max_abs_deviation", Field::decimal(fit.max_abs_deviation)},
      {"mean_tosses", Field::decimal(summary.mean_tosses)},
      {"variance_tosses", Field::decimal(summary.variance_tosses)},
      {"mean_standard_error", Field::decimal(summary.mean_standard_error())},
      {"expected_tosses", bias.is_fair() ? Field::rational(chain::expected_total_tosses(opt.n)) : Field::null()},
      {"min_tosses", Field::integer(static_cast<long long>(summary.min_tosses))},
      {"max_tosses", Field::integer(static_cast<long long>(summary.max_tosses))},
      {"min_pos", Field::integer(summary.min_pos)},
      {"max_pos", Field::integer(summary.max_pos)},
  };
  env.columns = {"k", "count", "frequency", "exact", "exact_approx", "z_score"};
  for (int k = 0; k < opt.n; ++k) {
    const auto count = summary.counts_by_k[k];
    env.rows.push_back({Field::integer(k), Field::integer(static_cast<long long>(count)),
                        Field::decimal(static_cast<double>(count) / static_cast<double>(summary.trials)),
                        Field::rational(exact.at(k)), approx(exact.at(k)), Field::decimal(fit.per_cell_z_scores[k])});
  }
  return env;
}

OutputEnvelope runtime_cmd(const Options& opt) {
  if (opt.max_n < 1) throw UsageError("--max-n must be >= 1");
  OutputEnvelope env;
  env.command = "runtime";
  env.parameters = {{"max_n", std::to_string(opt.max_n)}};
  env.columns = {"n", "E_closed", "E_exact", "E_approx", "delta_E", "delta_E_closed", "corollary_sum", "agreement"};
  const auto optional_field = [](const std::optional<Rational>& v) { return v ? Field::rational(*v) : Field::null(); };
  for (const auto& row : runtime::runtime_table(opt.max_n)) {
    env.rows.push_back({Field::integer(row.n), Field::rational(row.closed_E), Field::rational(row.E_n), approx(row.E_n),
                        optional_field(row.delta_E_n), optional_field(row.closed_delta_E),
                        optional_field(row.corollary_sum), Field::boolean(row.agreement)});
  }
  return env;
}

OutputEnvelope ntoss(const Options& opt) {
  const int cap = ntoss_cap();
  if (opt.max_tosses < 1 || opt.max_tosses > cap) {
    throw UsageError("--max-N must be in [1, " + std::to_string(cap) + "]");
  }
  const auto bias = parse_bias(opt.bias);
  OutputEnvelope env;
  env.command = "ntoss";
  env.parameters = {{"max_N", std::to_string(opt.max_tosses)}, {"bias", bias.p_right().to_string()}};
  env.columns = {"N", "n", "probability", "scaled", "approx"};
  for (int big_n = 1; big_n <= opt.max_tosses; ++big_n) {
    const auto dist = chain::ntoss_distribution(big_n, bias, cap);
    const Rational scale = Rational(2).pow(static_cast<unsigned>(big_n - 1));
    for (const auto& [n, p] : dist.probabilities) {
      env.rows.push_back({Field::integer(big_n), Field::integer(n), Field::rational(p), Field::rational(p * scale),
                          approx(p)});
    }
  }
  return env;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and Monte Carlo analysis of one-dimensional internal DLA", "idla"};
  app.require_subcommand(1);
  Options opt;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output encoding")->check(CLI::IsMember({"csv", "json"}));
  };

  auto* exact_cmd = app.add_subcommand("exact-dist", "Exact P(n,k) for k = 0..n-1");
  exact_cmd->add_option("--n", opt.n, "Number of particles")->required();
  exact_cmd->add_option("--bias", opt.bias, "Probability of a right step, e.g. 2/3");
  add_format(exact_cmd);

  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of P(n,k) and toss counts");
  sim_cmd->add_option("--n", opt.n, "Number of particles")->required();
  sim_cmd->add_option("--trials", opt.trials, "Number of games")->required();
  sim_cmd->add_option("--seed", opt.seed, "Master seed (64-bit)")->required();
  sim_cmd->add_option("--bias", opt.bias, "Probability of a right step, e.g. 2/3");
  sim_cmd->add_option("--workers", opt.workers, "Worker threads; does not change results");
  add_format(sim_cmd);

  auto* runtime_sub = app.add_subcommand("runtime", "Expected toss counts, exact engine against closed forms");
  runtime_sub->add_option("--max-n", opt.max_n, "Largest particle count")->required();
  add_format(runtime_sub);

  auto* ntoss_cmd = app.add_subcommand("ntoss", "Occupied-site distribution after N tosses");
  ntoss_cmd->add_option("--max-N,--max-tosses", opt.max_tosses, "Largest toss count")->required();
  ntoss_cmd->add_option("--bias", opt.bias, "Probability of a right step, e.g. 2/3");
  add_format(ntoss_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suites");
  std::vector<std::string> suites{"all"};
  for (const auto& s : suite_names()) suites.push_back(s);
  verify_cmd->add_option("--suite", opt.suite, "Suite to run")->check(CLI::IsMember(suites));
  add_format(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Format format = parse_format(opt.format);
    if (exact_cmd->parsed()) {
      out << render(exact_dist(opt), format);
    } else if (sim_cmd->parsed()) {
      out << render(simulate(opt), format);
    } else if (runtime_sub->parsed()) {
      const auto env = runtime_cmd(opt);
      out << render(env, format);
      const bool all_agree = std::all_of(env.rows.begin(), env.rows.end(),
                                         [](const auto& row) { return row.back().str() == "true"; });
      if (!all_agree) {
        err << "runtime: exact engine and closed forms disagree\n";
        return kExitVerificationFailed;
      }
    } else if (ntoss_cmd->parsed()) {
      out << render(ntoss(opt), format);
    } else if (verify_cmd->parsed()) {
      const auto results = run_suite(opt.suite);
      OutputEnvelope env;
      env.command = "verify";
      env.parameters = {{"suite", opt.suite}};
      env.columns = {"suite", "check", "passed", "detail"};
      const CheckResult* first_failure = nullptr;
      for (const auto& r : results) {
        // CSV fields never contain commas.
        std::string detail = r.detail;
        std::replace(detail.begin(), detail.end(), ',', ';');
        std::string check = r.check;
        std::replace(check.begin(), check.end(), ',', ';');
        env.rows.push_back({Field::text(r.suite), Field::text(check), Field::boolean(r.passed), Field::text(detail)});
        if (!r.passed && first_failure == nullptr) first_failure = &r;
      }
      out << render(env, format);
      if (first_failure != nullptr) {
        err << "verify: " << first_failure->suite << " / " << first_failure->check << " failed: " << first_failure->detail
            << "\n";
        return kExitVerificationFailed;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace idla::cli
