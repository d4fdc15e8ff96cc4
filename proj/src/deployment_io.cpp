#include "uavcov/deployment_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace uavcov {

using nlohmann::json;

double round_sig(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

namespace {

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

ConeAxis axis_from_tag(const std::string& tag) {
  if (tag == "+x") return ConeAxis::PlusX;
  if (tag == "-x") return ConeAxis::MinusX;
  if (tag == "-z") return ConeAxis::MinusZ;
  throw std::runtime_error("deployment: bad value for key 'axis': " + tag);
}

json require_key(const json& obj, const char* key) {
  if (!obj.contains(key))
    throw std::runtime_error(std::string("deployment: missing key '") + key + "'");
  return obj.at(key);
}

double num_at(const json& obj, const char* key) {
  const json v = require_key(obj, key);
  if (!v.is_number())
    throw std::runtime_error(std::string("deployment: key '") + key +
                             "' must be a number");
  return v.get<double>();
}

}  // namespace

std::string deployment_to_json(const DeploymentPlan& plan,
                               const BuildingDims& building) {
  const CoverageSummary summary = plan_coverage_summary(plan, building);
  json doc;
  doc["schema_version"] = 1;
  doc["method"] = method_name(plan.method);
  doc["seed"] = plan.seed;
  doc["building"] = {{"x_b", round_sig(building.x_b)},
                     {"y_b", round_sig(building.y_b)},
                     {"z_b", round_sig(building.z_b)}};
  doc["params"] = {{"theta_b_deg", round_sig(plan.theta_b_deg)},
                   {"standoff_m", round_sig(plan.standoff)},
                   {"r_near_m", round_sig(plan.r_near)},
                   {"r_far_m", round_sig(plan.r_far)}};
  doc["analytic"] = {{"covered_volume_m3", round_sig(summary.covered_volume)},
                     {"covered_fraction", round_sig(summary.fraction)}};
  if (!plan.diagnostic.empty()) doc["diagnostic"] = plan.diagnostic;
  json uavs = json::array();
  for (const PlannedUav& u : plan.uavs) {
    uavs.push_back({{"axis", axis_tag(u.cone.axis)},
                    {"foot_u_m", round_sig(u.cone.axis_foot.x())},
                    {"foot_v_m", round_sig(u.cone.axis_foot.y())},
                    {"x", round_sig(u.position.x())},
                    {"y", round_sig(u.position.y())},
                    {"z", round_sig(u.position.z())}});
  }
  doc["uavs"] = std::move(uavs);
  return doc.dump(2) + "\n";
}

void write_deployment(const std::string& path, const DeploymentPlan& plan,
                      const BuildingDims& building) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write deployment file: " + path);
  out << deployment_to_json(plan, building);
}

DeploymentPlan deployment_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("deployment: invalid JSON: ") + e.what());
  }
  if (require_key(doc, "schema_version").get<int>() != 1)
    throw std::runtime_error("deployment: unsupported value for key 'schema_version'");

  DeploymentPlan plan;
  plan.method = method_from_name(require_key(doc, "method").get<std::string>());
  plan.seed = require_key(doc, "seed").get<std::uint64_t>();
  const json b = require_key(doc, "building");
  plan.building = BuildingDims{num_at(b, "x_b"), num_at(b, "y_b"), num_at(b, "z_b")};
  validate(plan.building);
  const json p = require_key(doc, "params");
  plan.theta_b_deg = num_at(p, "theta_b_deg");
  plan.standoff = num_at(p, "standoff_m");
  plan.r_near = num_at(p, "r_near_m");
  plan.r_far = num_at(p, "r_far_m");
  if (doc.contains("diagnostic"))
    plan.diagnostic = doc.at("diagnostic").get<std::string>();

  const json uavs = require_key(doc, "uavs");
  if (!uavs.is_array())
    throw std::runtime_error("deployment: key 'uavs' must be an array");
  for (const json& u : uavs) {
    PlannedUav out;
    const ConeAxis axis = axis_from_tag(require_key(u, "axis").get<std::string>());
    const Vec2 foot(num_at(u, "foot_u_m"), num_at(u, "foot_v_m"));
    out.cone = make_cone(axis, foot, plan.standoff, plan.theta_b_deg, plan.building);
    out.position = Vec3(num_at(u, "x"), num_at(u, "y"), num_at(u, "z"));
    plan.uavs.push_back(std::move(out));
  }
  return plan;
}

DeploymentPlan read_deployment(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open deployment file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return deployment_from_json(text);
}

std::string report_to_json(const CoverageReport& report, const HoleSet& holes) {
  json doc;
  doc["schema_version"] = 1;
  doc["seed"] = report.seed;
  doc["n_samples"] = report.n_samples;
  doc["analytic_fraction"] = round_sig(report.analytic_fraction);
  doc["mc_fraction"] = round_sig(report.mc_fraction);
  doc["mc_halfwidth_95"] = round_sig(report.mc_halfwidth_95);
  doc["overlap_violations"] = report.overlap_violations;
  json comps = json::array();
  for (const HoleComponent& c : holes.components) {
    comps.push_back(
        {{"voxels", c.voxels},
         {"bbox_min", {round_sig(c.bbox_min.x()), round_sig(c.bbox_min.y()),
                       round_sig(c.bbox_min.z())}},
         {"bbox_max", {round_sig(c.bbox_max.x()), round_sig(c.bbox_max.y()),
                       round_sig(c.bbox_max.z())}}});
  }
  doc["holes"] = {{"voxel_size", round_sig(holes.voxel_size)},
                  {"uncovered_voxels", holes.uncovered_voxels},
                  {"components", std::move(comps)}};
  return doc.dump(2) + "\n";
}

}  // namespace uavcov
