// The four CLI operations behind the `uavcov` tool, callable as a library.
// Every command is deterministic given the scenario (the seed is part of it)
// and writes LF-terminated, '.'-decimal output.
#pragma once

#include "uavcov/scenario.hpp"

#include <optional>
#include <string>

namespace uavcov {

/// Plans one deployment and writes the JSON document (also for infeasible
/// geometry, with a diagnostic field). Exactly one of theta_b / r_far must be
/// given. Returns the plan so callers can map emptiness to an exit code.
DeploymentPlan cmd_plan(const Scenario& sc, Method method,
                        std::optional<double> theta_b_deg,
                        std::optional<double> r_far, const std::string& out_path);

/// One CSV row per (method, theta_B), methods in FOBS, ABS, AUDA order and
/// thetas ascending. Returns the CSV text that was written.
std::string cmd_sweep(const Scenario& sc, const std::string& out_path);

/// Per-UAV minimum transmit power and the plan total in mW; with
/// full_coverage the different-channel augmentation UAVs are included.
std::string cmd_power(const Scenario& sc, const std::string& deployment_path,
                      bool full_coverage, const std::string& out_path);

/// Monte-Carlo coverage report plus hole inventory as JSON.
std::string cmd_evaluate(const Scenario& sc, const std::string& deployment_path,
                         const std::string& out_path);

}  // namespace uavcov
