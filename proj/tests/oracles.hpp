// Test-side oracles, deliberately independent of the library code paths they
// check: first-principles cone membership, Simpson quadrature, sampled volume
// estimates, and the closed-form two-circle packing verdict.
#pragma once

#include "uavcov/geometry.hpp"
#include "uavcov/rng.hpp"

#include <cmath>
#include <functional>

namespace oracle {

using uavcov::BuildingDims;
using uavcov::ConeAxis;
using uavcov::TruncatedCone;
using uavcov::Vec2;
using uavcov::Vec3;

// Membership recomputed from the apex, beam tangent, and facade slab, without
// calling point_in_cone.
inline bool in_cone(const TruncatedCone& c, const Vec3& p, const BuildingDims& b) {
  if (p.x() < 0 || p.x() > b.x_b || p.y() < 0 || p.y() > b.y_b || p.z() < 0 ||
      p.z() > b.z_b)
    return false;
  double axis_p, axis_apex, du, dv;
  if (c.axis == ConeAxis::MinusZ) {
    axis_p = p.z();
    axis_apex = c.apex.z();
    du = p.x() - c.axis_foot.x();
    dv = p.y() - c.axis_foot.y();
  } else {
    axis_p = p.x();
    axis_apex = c.apex.x();
    du = p.y() - c.axis_foot.x();
    dv = p.z() - c.axis_foot.y();
  }
  const double lo = std::min(c.near_plane, c.far_plane);
  const double hi = std::max(c.near_plane, c.far_plane);
  if (axis_p < lo || axis_p > hi) return false;
  const double tan_half = std::tan(c.half_angle_deg * 3.14159265358979323846 / 180.0);
  const double allowed = std::abs(axis_p - axis_apex) * tan_half;
  return du * du + dv * dv <= allowed * allowed;
}

// Sampled 3D overlap verdict: true when no sample lands in both cones. The
// sampling volume is the intersection of the cones' bounding boxes clipped to
// the building, which concentrates samples where an overlap could be.
inline bool disjoint_sampled(const TruncatedCone& a, const TruncatedCone& c,
                             const BuildingDims& b, long samples,
                             std::uint64_t seed) {
  auto box = [&](const TruncatedCone& k, Vec3& lo, Vec3& hi) {
    const double alo = std::min(k.near_plane, k.far_plane);
    const double ahi = std::max(k.near_plane, k.far_plane);
    if (k.axis == ConeAxis::MinusZ) {
      lo = Vec3(k.axis_foot.x() - k.r_far, k.axis_foot.y() - k.r_far, alo);
      hi = Vec3(k.axis_foot.x() + k.r_far, k.axis_foot.y() + k.r_far, ahi);
    } else {
      lo = Vec3(alo, k.axis_foot.x() - k.r_far, k.axis_foot.y() - k.r_far);
      hi = Vec3(ahi, k.axis_foot.x() + k.r_far, k.axis_foot.y() + k.r_far);
    }
    lo = lo.cwiseMax(Vec3::Zero());
    hi = hi.cwiseMin(Vec3(b.x_b, b.y_b, b.z_b));
  };
  Vec3 lo1, hi1, lo2, hi2;
  box(a, lo1, hi1);
  box(c, lo2, hi2);
  const Vec3 lo = lo1.cwiseMax(lo2);
  const Vec3 hi = hi1.cwiseMin(hi2);
  if ((hi - lo).minCoeff() <= 0) return true;
  uavcov::SplitMix64 rng(seed);
  for (long s = 0; s < samples; ++s) {
    const Vec3 p(rng.uniform(lo.x(), hi.x()), rng.uniform(lo.y(), hi.y()),
                 rng.uniform(lo.z(), hi.z()));
    if (in_cone(a, p, b) && in_cone(c, p, b)) return false;
  }
  return true;
}

// Composite-Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double lo, double hi,
                      int intervals) {
  if (intervals % 2) ++intervals;
  const double h = (hi - lo) / intervals;
  double acc = f(lo) + f(hi);
  for (int i = 1; i < intervals; ++i)
    acc += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Closed-form two-circle packing feasibility: both circles fit iff the
// diameter fits both sides and the opposite-corner placement separates them.
inline bool two_circles_fit(double r, double d1, double d2) {
  if (2 * r > std::min(d1, d2)) return false;
  const double a = d1 - 2 * r;
  const double b = d2 - 2 * r;
  return a * a + b * b >= 4 * r * r;
}

}  // namespace oracle
