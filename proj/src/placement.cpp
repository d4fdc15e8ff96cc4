#include "uavcov/placement.hpp"

#include "uavcov/packing.hpp"

#include <cmath>
#include <stdexcept>

namespace uavcov {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::FOBS:
      return "FOBS";
    case Method::ABS:
      return "ABS";
    case Method::AUDA:
    default:
      return "AUDA";
  }
}

Method method_from_name(const std::string& name) {
  if (name == "FOBS") return Method::FOBS;
  if (name == "ABS") return Method::ABS;
  if (name == "AUDA") return Method::AUDA;
  throw std::domain_error("unknown method: " + name);
}

namespace {

DeploymentPlan packed_plan(Method method, ConeAxis axis, const BuildingDims& building,
                           double theta_b_deg, double standoff, double d1, double d2,
                           std::uint64_t seed) {
  validate(building);
  const double span = x_family(axis) ? building.x_b : building.z_b;
  const ConeRadii radii = cone_radii(standoff, span, theta_b_deg);

  DeploymentPlan plan;
  plan.method = method;
  plan.building = building;
  plan.theta_b_deg = theta_b_deg;
  plan.standoff = standoff;
  plan.r_near = radii.r_near;
  plan.r_far = radii.r_far;
  plan.seed = seed;

  if (2.0 * radii.r_far > std::min(d1, d2)) {
    plan.diagnostic = "no circle fits";
    return plan;
  }
  const MaxCirclesResult packed = max_circles(radii.r_far, d1, d2, seed);
  if (packed.n == 0) {
    plan.diagnostic = "no circle fits";
    return plan;
  }
  plan.uavs.reserve(packed.best.centers.size());
  for (const Vec2& c : packed.best.centers) {
    PlannedUav u;
    u.cone = make_cone(axis, c, standoff, theta_b_deg, building);
    u.position = u.cone.apex;
    plan.uavs.push_back(std::move(u));
  }
  return plan;
}

}  // namespace

DeploymentPlan plan_fobs(const BuildingDims& building, double theta_b_deg,
                         double standoff, std::uint64_t seed) {
  return packed_plan(Method::FOBS, ConeAxis::PlusX, building, theta_b_deg,
                     standoff, building.y_b, building.z_b, seed);
}

DeploymentPlan plan_abs(const BuildingDims& building, double theta_b_deg,
                        double standoff_z, std::uint64_t seed) {
  return packed_plan(Method::ABS, ConeAxis::MinusZ, building, theta_b_deg,
                     standoff_z, building.x_b, building.y_b, seed);
}

DeploymentPlan plan_auda(const BuildingDims& building, double r_far) {
  validate(building);
  if (r_far <= 0) throw std::domain_error("plan_auda: r_far must be positive");

  DeploymentPlan plan;
  plan.method = Method::AUDA;
  plan.building = building;
  plan.standoff = auda_offset(building.x_b);
  plan.r_far = r_far;
  plan.r_near = gamma_ratio() * r_far;
  plan.theta_b_deg =
      2.0 * std::atan(r_far / (plan.standoff + building.x_b)) * 180.0 / kPi;
  plan.seed = 0;

  if (2.0 * r_far > std::min(building.y_b, building.z_b)) {
    plan.diagnostic = "cell larger than facade";
    return plan;
  }

  const int cols = static_cast<int>(std::floor(building.y_b / (2 * r_far) + kGeomTol));
  const int rows = static_cast<int>(std::floor(building.z_b / (2 * r_far) + kGeomTol));

  auto add = [&](ConeAxis axis, double u, double v) {
    PlannedUav uav;
    uav.cone = make_cone_from_r_far(axis, Vec2(u, v), plan.standoff, r_far, building);
    uav.position = uav.cone.apex;
    plan.uavs.push_back(std::move(uav));
  };

  // Side B covers the cell centers.
  for (int k1 = 1; k1 <= cols; ++k1)
    for (int s1 = 1; s1 <= rows; ++s1)
      add(ConeAxis::MinusX, (2 * k1 - 1) * r_far, (2 * s1 - 1) * r_far);
  // Side A covers the full cell-corner lattice; corners on the facade
  // boundary become half/quarter beams clipped by the building.
  for (int k2 = 0; k2 <= cols; ++k2)
    for (int s2 = 0; s2 <= rows; ++s2)
      add(ConeAxis::PlusX, 2 * k2 * r_far, 2 * s2 * r_far);
  return plan;
}

CoverageSummary plan_coverage_summary(const DeploymentPlan& plan,
                                      const BuildingDims& building) {
  CoverageSummary out;
  out.n_uavs = static_cast<int>(plan.uavs.size());
  for (const PlannedUav& u : plan.uavs) {
    if (cone_inside_facades(u.cone, building, kGeomTol)) {
      out.covered_volume +=
          truncated_cone_volume(u.cone.span(), u.cone.r_near, u.cone.r_far);
    } else {
      out.covered_volume += clipped_cone_volume(u.cone, building);
    }
  }
  out.fraction = out.covered_volume / building.volume();
  return out;
}

}  // namespace uavcov
