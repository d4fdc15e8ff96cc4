// Plan verification independent of the planners: seeded Monte-Carlo volume
// coverage with overlap detection, the facade-area coverage index, voxel hole
// extraction, and the greedy different-channel augmentation that brings a
// plan to full coverage.
#pragma once

#include "uavcov/placement.hpp"

#include <cstdint>
#include <vector>

namespace uavcov {

struct CoverageReport {
  double analytic_fraction = 0;
  double mc_fraction = 0;
  double mc_halfwidth_95 = 0;
  long n_samples = 0;
  std::uint64_t seed = 0;
  long overlap_violations = 0;  // sampled points inside >= 2 cones
};

/// Uniform seeded sampling of the building prism. Deterministic for a fixed
/// seed; requires n_samples >= 10^4.
CoverageReport mc_coverage(const DeploymentPlan& plan, const BuildingDims& building,
                           long n_samples, std::uint64_t seed);

/// Sum of the projected circle areas on both facades (clipped to the facade
/// rectangle) divided by the single-facade area y_b*z_b. A coverage index,
/// not a probability: it can exceed 1 by construction. x-axis plans only.
double facade_coverage_index(const DeploymentPlan& plan, const BuildingDims& building);

struct HoleComponent {
  long voxels = 0;
  Vec3 bbox_min = Vec3::Zero();
  Vec3 bbox_max = Vec3::Zero();
};

struct HoleSet {
  double voxel_size = 0;
  long uncovered_voxels = 0;
  std::vector<HoleComponent> components;  // 6-connected, discovery order
};

/// Voxelizes the prism and marks voxels whose centers no cone covers.
/// voxel_size must be positive and at most a quarter of the smallest
/// building dimension.
HoleSet find_holes(const DeploymentPlan& plan, const BuildingDims& building,
                   double voxel_size);

struct Augmentation {
  int extra_uavs = 0;
  std::vector<TruncatedCone> cones;
};

/// Greedy full-coverage augmentation with different-channel UAVs that may
/// overlap the base plan and each other. Extra UAVs reuse the plan's
/// beamwidth with the (sqrt(2)/2)*span standoff of their axis family; each
/// greedy step places the axis-aligned cone that fully covers the most
/// remaining uncovered voxels (a voxel counts as covered only when one cone
/// contains all eight of its corners, so termination means every point of
/// every voxel is covered). Deterministic: no randomness, lexicographic
/// tie-breaking.
Augmentation augment_full_coverage(const DeploymentPlan& plan,
                                   const BuildingDims& building, double voxel_size);

}  // namespace uavcov
