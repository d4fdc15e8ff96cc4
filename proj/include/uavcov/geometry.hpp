// Coverage geometry for facade-mounted directional beams: truncated cones
// spanning a rectangular building, their facade-circle projections, and the
// disjointness test that reduces 3D cone intersection to 2D circles.
//
// Conventions: the building occupies [0,x_b]x[0,y_b]x[0,z_b]. A cone's axis is
// one of three axis-aligned directions; "facade plane" coordinates are (y,z)
// for x-axis cones and (x,y) for z-axis cones. r_near is the radius on the
// facade closest to the apex, r_far on the opposite facade; r_near < r_far.
#pragma once

#include <Eigen/Core>

#include <utility>

namespace uavcov {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

/// Slack for closed predicates: tangent circles/cones count as disjoint,
/// boundary points count as inside.
inline constexpr double kGeomTol = 1e-9;

struct BuildingDims {
  double x_b = 0;
  double y_b = 0;
  double z_b = 0;

  double volume() const { return x_b * y_b * z_b; }
  bool contains(const Vec3& p, double tol = kGeomTol) const {
    return p.x() >= -tol && p.x() <= x_b + tol && p.y() >= -tol &&
           p.y() <= y_b + tol && p.z() >= -tol && p.z() <= z_b + tol;
  }
};

/// Throws std::domain_error unless all dimensions are strictly positive and finite.
void validate(const BuildingDims& b);

/// Beam directions: +x from side A (x<0), -x from side B (x>x_b), -z from above.
enum class ConeAxis { PlusX, MinusX, MinusZ };

enum class Facade { A, B, Roof, Floor };

inline bool x_family(ConeAxis a) { return a != ConeAxis::MinusZ; }

struct FacadeCircle {
  Facade facade;
  Vec2 center;  // facade-plane coordinates
  double radius = 0;
};

struct TruncatedCone {
  ConeAxis axis = ConeAxis::PlusX;
  Vec3 apex = Vec3::Zero();
  double half_angle_deg = 0;  // theta_B / 2
  double near_plane = 0;      // axis coordinate of the penetrated facade
  double far_plane = 0;       // axis coordinate of the opposite facade
  Vec2 axis_foot = Vec2::Zero();
  double r_near = 0;
  double r_far = 0;

  double span() const { return std::abs(far_plane - near_plane); }
  double standoff() const;
  double tan_half() const;
  /// Radius of the beam cross-section at perpendicular distance d from the apex.
  double radius_at(double apex_distance) const { return apex_distance * tan_half(); }
};

/// Facade-plane coordinates of a 3D point for the given axis family.
Vec2 lateral_of(ConeAxis axis, const Vec3& p);
/// Axis coordinate of a 3D point for the given axis family.
double axis_coord_of(ConeAxis axis, const Vec3& p);

/// gamma = sqrt(2) - 1, the small-to-large radius ratio that makes the
/// diagonal of a 2r_far square cell equal 2r_far + 2r_near.
double gamma_ratio();

/// Facade standoff (sqrt(2)/2) * x_b; satisfies x/(x_b + x) = gamma_ratio().
double auda_offset(double x_b);

struct ConeRadii {
  double r_near = 0;
  double r_far = 0;
};

/// r_near = standoff*tan(theta_b/2), r_far = (standoff+span)*tan(theta_b/2).
ConeRadii cone_radii(double standoff, double span, double theta_b_deg);

/// (1/3)*pi*span*(r_near^2 + r_near*r_far + r_far^2).
double truncated_cone_volume(double span, double r_near, double r_far);

/// Build a cone from its beamwidth. Facade planes are taken from the building.
TruncatedCone make_cone(ConeAxis axis, const Vec2& axis_foot, double standoff,
                        double theta_b_deg, const BuildingDims& building);
/// Build a cone from its far radius; the half angle is derived.
TruncatedCone make_cone_from_r_far(ConeAxis axis, const Vec2& axis_foot,
                                   double standoff, double r_far,
                                   const BuildingDims& building);

/// True iff p is inside the building and inside the beam between the two
/// facades; boundary points within kGeomTol count as inside.
bool point_in_cone(const TruncatedCone& cone, const Vec3& p,
                   const BuildingDims& building);

/// The circles where the cone meets its near and far facades.
std::pair<FacadeCircle, FacadeCircle> facade_projections(const TruncatedCone& cone);

/// For cones spanning the same facade pair the verdict is exact: disjoint in
/// 3D iff the projected circles are disjoint on each shared facade (tangency
/// counts as disjoint). Cones of different axis families fall back to a dense
/// sampled test at kCrossFamilyStep resolution.
bool cones_disjoint(const TruncatedCone& a, const TruncatedCone& b,
                    const BuildingDims& building);

inline constexpr double kCrossFamilyStep = 0.25;

/// Exact area of disc(center, radius) intersected with [u0,u1]x[v0,v1].
double circle_rect_area(const Vec2& center, double radius, double u0, double u1,
                        double v0, double v1);

/// Volume of the cone clipped to the building's lateral cross-section,
/// by per-axis quadrature of the clipped disc area (exact to ~1e-12 relative;
/// feet on the facade boundary give exactly half/quarter cones).
double clipped_cone_volume(const TruncatedCone& cone, const BuildingDims& building);

/// True when both facade circles fit inside the facade rectangle (tol slack).
bool cone_inside_facades(const TruncatedCone& cone, const BuildingDims& building,
                         double tol = 1e-6);

}  // namespace uavcov
