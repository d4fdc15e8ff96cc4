// uavcov: plan / sweep / power / evaluate for facade-mounted UAV coverage of
// a rectangular building. Exit codes: 0 success, 2 configuration error,
// 3 infeasible geometry.
#include "uavcov/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kInfeasible = 3;

struct CommonOpts {
  std::string scenario_path;
  std::optional<std::uint64_t> seed;
  std::optional<long> samples;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--scenario", opts.scenario_path, "scenario file")->required();
  cmd->add_option("--seed", opts.seed, "override the scenario seed");
  cmd->add_option("--samples", opts.samples, "override the Monte-Carlo sample count");
}

uavcov::Scenario load(const CommonOpts& opts) {
  uavcov::Scenario sc = uavcov::load_scenario(opts.scenario_path);
  if (opts.seed) sc.seed = *opts.seed;
  if (opts.samples) sc.n_samples = *opts.samples;
  return sc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV indoor-coverage planner"};
  app.require_subcommand(1);

  CommonOpts plan_opts, sweep_opts, power_opts, eval_opts;
  std::string method_name, out_path, deployment_path;
  std::optional<double> theta_b, r_far;
  bool full_coverage = false;

  CLI::App* plan = app.add_subcommand("plan", "plan one deployment");
  add_common(plan, plan_opts);
  plan->add_option("--method", method_name, "FOBS | ABS | AUDA")->required();
  plan->add_option("--theta-b", theta_b, "beamwidth in degrees");
  plan->add_option("--r-far", r_far, "far-circle radius in meters");
  plan->add_option("--out", out_path, "output deployment JSON")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "coverage sweep CSV");
  add_common(sweep, sweep_opts);
  sweep->add_option("--out", out_path, "output CSV")->required();

  CLI::App* power = app.add_subcommand("power", "per-UAV transmit power CSV");
  add_common(power, power_opts);
  power->add_option("--deployment", deployment_path, "deployment JSON")->required();
  power->add_flag("--full-coverage", full_coverage,
                  "include different-channel augmentation UAVs");
  power->add_option("--out", out_path, "output CSV")->required();

  CLI::App* evaluate = app.add_subcommand("evaluate", "Monte-Carlo report JSON");
  add_common(evaluate, eval_opts);
  evaluate->add_option("--deployment", deployment_path, "deployment JSON")->required();
  evaluate->add_option("--out", out_path, "output JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    if (plan->parsed()) {
      const uavcov::Scenario sc = load(plan_opts);
      const uavcov::DeploymentPlan out = uavcov::cmd_plan(
          sc, uavcov::method_from_name(method_name), theta_b, r_far, out_path);
      if (out.empty()) {
        std::fprintf(stderr, "infeasible geometry: %s\n", out.diagnostic.c_str());
        return kInfeasible;
      }
    } else if (sweep->parsed()) {
      uavcov::cmd_sweep(load(sweep_opts), out_path);
    } else if (power->parsed()) {
      uavcov::cmd_power(load(power_opts), deployment_path, full_coverage, out_path);
    } else if (evaluate->parsed()) {
      uavcov::cmd_evaluate(load(eval_opts), deployment_path, out_path);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigError;
  }
  return kOk;
}
