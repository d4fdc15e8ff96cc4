// Deployment planners. FOBS packs far circles on one facade, ABS packs on the
// roof, AUDA interleaves cones from two opposite facades in the alternating
// upside-down arrangement: cell-center beams from side B and cell-corner beams
// from side A, with the (sqrt(2)/2)*x_b standoff that makes neighboring
// projections exactly tangent.
#pragma once

#include "uavcov/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace uavcov {

enum class Method { FOBS, ABS, AUDA };

const char* method_name(Method m);
Method method_from_name(const std::string& name);  // throws std::domain_error

struct PlannedUav {
  Vec3 position = Vec3::Zero();
  TruncatedCone cone;
};

struct DeploymentPlan {
  Method method = Method::FOBS;
  BuildingDims building;
  double theta_b_deg = 0;
  double standoff = 0;  // perpendicular facade distance shared by all UAVs
  double r_near = 0;
  double r_far = 0;
  std::uint64_t seed = 0;
  std::vector<PlannedUav> uavs;
  std::string diagnostic;  // set when the plan is empty for a reason

  bool empty() const { return uavs.empty(); }
};

/// All UAVs on side A at x = -standoff, one per circle packed on the y*z
/// facade rectangle with radius r_far = (standoff + x_b) tan(theta_b/2).
DeploymentPlan plan_fobs(const BuildingDims& building, double theta_b_deg,
                         double standoff, std::uint64_t seed);

/// Same construction rotated: UAVs above the roof at z = z_b + standoff_z,
/// circles of radius (standoff_z + z_b) tan(theta_b/2) packed on x*y.
DeploymentPlan plan_abs(const BuildingDims& building, double theta_b_deg,
                        double standoff_z, std::uint64_t seed);

/// Alternating upside-down arrangement parameterized by the large radius.
/// Side-B UAVs sit at the centers of the 2*r_far square cells; side-A UAVs at
/// every cell-corner lattice point, including facade-boundary corners whose
/// cones the building clips to half/quarter beams. Per cell the clipped
/// corner beams sum to exactly one extra cone volume, so the plan covers two
/// cone volumes per cell. Requires 2*r_far <= min(y_b, z_b).
DeploymentPlan plan_auda(const BuildingDims& building, double r_far);

struct CoverageSummary {
  int n_uavs = 0;
  double covered_volume = 0;  // m^3, clipped cones contribute clipped volume
  double fraction = 0;
};

CoverageSummary plan_coverage_summary(const DeploymentPlan& plan,
                                      const BuildingDims& building);

}  // namespace uavcov
