// Scenario files: flat "key = value" text with dotted section prefixes,
// '#' comments, and comma-separated lists. Diff-friendly and trivially
// parseable; see README for the key reference.
#pragma once

#include "uavcov/link_budget.hpp"
#include "uavcov/placement.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace uavcov {

struct Scenario {
  BuildingDims building{30, 40, 60};
  RadioParams radio;
  std::vector<Method> methods{Method::FOBS, Method::ABS, Method::AUDA};

  // Sweep: either a theta_B range or an explicit r_far list.
  bool sweep_is_theta = false;
  double theta_min_deg = 0, theta_max_deg = 0, theta_step_deg = 0;
  std::vector<double> r_far_list;

  std::uint64_t seed = 0;
  long n_samples = 1'000'000;
  double voxel_size = 0.5;
  double grid_step = 0.5;

  // Facade standoffs; non-positive means the (sqrt(2)/2)*span default.
  double standoff_x = 0;
  double standoff_z = 0;

  double effective_standoff_x() const;
  double effective_standoff_z() const;
  /// Sweep theta values in ascending order (converted from r_far for the
  /// given method when the scenario lists radii).
  std::vector<double> sweep_thetas(Method m) const;
};

/// Configuration problems carry the offending line.
struct ScenarioError : std::runtime_error {
  int line;
  ScenarioError(int line_no, const std::string& msg);
};

Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

/// theta_B for which the far circle of the method's cone has radius r_far.
double theta_for_r_far(const Scenario& sc, Method m, double r_far);
/// Far radius produced by theta_B for the given method.
double r_far_for_theta(const Scenario& sc, Method m, double theta_b_deg);

/// Run the method's planner at the given beamwidth.
DeploymentPlan build_plan(const Scenario& sc, Method m, double theta_b_deg);

}  // namespace uavcov
