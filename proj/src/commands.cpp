#include "uavcov/commands.hpp"

#include "uavcov/coverage.hpp"
#include "uavcov/deployment_io.hpp"
#include "uavcov/link_budget.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace uavcov {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  out << text;
}

std::vector<Method> canonical_methods(const Scenario& sc) {
  std::vector<Method> out;
  for (Method m : {Method::FOBS, Method::ABS, Method::AUDA})
    if (std::find(sc.methods.begin(), sc.methods.end(), m) != sc.methods.end())
      out.push_back(m);
  return out;
}

const char* axis_tag(ConeAxis a) {
  switch (a) {
    case ConeAxis::PlusX:
      return "+x";
    case ConeAxis::MinusX:
      return "-x";
    case ConeAxis::MinusZ:
    default:
      return "-z";
  }
}

}  // namespace

DeploymentPlan cmd_plan(const Scenario& sc, Method method,
                        std::optional<double> theta_b_deg,
                        std::optional<double> r_far, const std::string& out_path) {
  if (theta_b_deg.has_value() == r_far.has_value())
    throw std::runtime_error("plan: give exactly one of --theta-b / --r-far");
  const double theta =
      theta_b_deg ? *theta_b_deg : theta_for_r_far(sc, method, *r_far);
  DeploymentPlan plan = build_plan(sc, method, theta);
  write_deployment(out_path, plan, sc.building);
  return plan;
}

std::string cmd_sweep(const Scenario& sc, const std::string& out_path) {
  std::string csv =
      "method,theta_b_deg,r_far_m,n_uavs,analytic_fraction,mc_fraction,mc_ci95\n";
  for (Method m : canonical_methods(sc)) {
    for (double theta : sc.sweep_thetas(m)) {
      const DeploymentPlan plan = build_plan(sc, m, theta);
      const CoverageSummary summary = plan_coverage_summary(plan, sc.building);
      const CoverageReport mc =
          mc_coverage(plan, sc.building, sc.n_samples, sc.seed);
      csv += std::string(method_name(m)) + "," + fmt(theta) + "," +
             fmt(plan.r_far) + "," + std::to_string(summary.n_uavs) + "," +
             fmt(summary.fraction) + "," + fmt(mc.mc_fraction) + "," +
             fmt(mc.mc_halfwidth_95) + "\n";
    }
  }
  write_text(out_path, csv);
  return csv;
}

std::string cmd_power(const Scenario& sc, const std::string& deployment_path,
                      bool full_coverage, const std::string& out_path) {
  const DeploymentPlan plan = read_deployment(deployment_path);
  RadioParams params = sc.radio;
  params.theta_b_deg = plan.theta_b_deg;
  validate(params);

  std::vector<std::pair<const char*, TruncatedCone>> cones;
  for (const PlannedUav& u : plan.uavs) cones.emplace_back("base", u.cone);
  if (full_coverage) {
    const Augmentation extra =
        augment_full_coverage(plan, plan.building, sc.voxel_size);
    for (const TruncatedCone& c : extra.cones) cones.emplace_back("extra", c);
  }

  std::string csv =
      "index,kind,axis,foot_u_m,foot_v_m,min_tx_power_dbm,power_mw\n";
  double total_mw = 0.0;
  int index = 0;
  for (const auto& [kind, cone] : cones) {
    const double dbm = min_tx_power_dbm(cone, plan.building, params, sc.grid_step);
    const double mw = dbm_to_mw(dbm);
    total_mw += mw;
    csv += std::to_string(index++) + "," + kind + "," + axis_tag(cone.axis) +
           "," + fmt(cone.axis_foot.x()) + "," + fmt(cone.axis_foot.y()) + "," +
           fmt(dbm) + "," + fmt(mw) + "\n";
  }
  csv += "total,,,,,," + fmt(total_mw) + "\n";
  write_text(out_path, csv);
  return csv;
}

std::string cmd_evaluate(const Scenario& sc, const std::string& deployment_path,
                         const std::string& out_path) {
  const DeploymentPlan plan = read_deployment(deployment_path);
  const CoverageReport report =
      mc_coverage(plan, plan.building, sc.n_samples, sc.seed);
  const HoleSet holes = find_holes(plan, plan.building, sc.voxel_size);
  const std::string text = report_to_json(report, holes);
  write_text(out_path, text);
  return text;
}

}  // namespace uavcov
