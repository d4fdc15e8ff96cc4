#include "uavcov/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace uavcov {

namespace {

constexpr double kPi = 3.14159265358979323846;

double deg2rad(double d) { return d * kPi / 180.0; }

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

void validate(const BuildingDims& b) {
  require(std::isfinite(b.x_b) && std::isfinite(b.y_b) && std::isfinite(b.z_b),
          "building dimensions must be finite");
  require(b.x_b > 0 && b.y_b > 0 && b.z_b > 0,
          "building dimensions must be strictly positive");
}

double TruncatedCone::standoff() const {
  return std::abs(axis_coord_of(axis, apex) - near_plane);
}

double TruncatedCone::tan_half() const { return std::tan(deg2rad(half_angle_deg)); }

Vec2 lateral_of(ConeAxis axis, const Vec3& p) {
  return x_family(axis) ? Vec2(p.y(), p.z()) : Vec2(p.x(), p.y());
}

double axis_coord_of(ConeAxis axis, const Vec3& p) {
  return x_family(axis) ? p.x() : p.z();
}

double gamma_ratio() { return std::sqrt(2.0) - 1.0; }

double auda_offset(double x_b) {
  require(x_b > 0 && std::isfinite(x_b), "auda_offset: x_b must be positive");
  return x_b * std::sqrt(2.0) / 2.0;
}

ConeRadii cone_radii(double standoff, double span, double theta_b_deg) {
  require(standoff > 0, "cone_radii: standoff must be positive");
  require(span > 0, "cone_radii: span must be positive");
  require(theta_b_deg > 0 && theta_b_deg < 180,
          "cone_radii: theta_b must lie in (0, 180) degrees");
  const double t = std::tan(deg2rad(theta_b_deg / 2.0));
  return {standoff * t, (standoff + span) * t};
}

double truncated_cone_volume(double span, double r_near, double r_far) {
  require(span > 0, "truncated_cone_volume: span must be positive");
  require(r_near > 0 && r_near <= r_far,
          "truncated_cone_volume: need 0 < r_near <= r_far");
  return kPi / 3.0 * span * (r_near * r_near + r_near * r_far + r_far * r_far);
}

namespace {

TruncatedCone assemble(ConeAxis axis, const Vec2& foot, double standoff,
                       double half_angle_deg, const BuildingDims& building) {
  validate(building);
  require(standoff > 0, "make_cone: standoff must be positive");
  require(half_angle_deg > 0 && half_angle_deg < 90,
          "make_cone: half angle must lie in (0, 90) degrees");

  TruncatedCone c;
  c.axis = axis;
  c.axis_foot = foot;
  c.half_angle_deg = half_angle_deg;
  const double t = std::tan(deg2rad(half_angle_deg));
  switch (axis) {
    case ConeAxis::PlusX:
      c.apex = Vec3(-standoff, foot.x(), foot.y());
      c.near_plane = 0.0;
      c.far_plane = building.x_b;
      break;
    case ConeAxis::MinusX:
      c.apex = Vec3(building.x_b + standoff, foot.x(), foot.y());
      c.near_plane = building.x_b;
      c.far_plane = 0.0;
      break;
    case ConeAxis::MinusZ:
      c.apex = Vec3(foot.x(), foot.y(), building.z_b + standoff);
      c.near_plane = building.z_b;
      c.far_plane = 0.0;
      break;
  }
  const double span = x_family(axis) ? building.x_b : building.z_b;
  c.r_near = standoff * t;
  c.r_far = (standoff + span) * t;
  return c;
}

}  // namespace

TruncatedCone make_cone(ConeAxis axis, const Vec2& axis_foot, double standoff,
                        double theta_b_deg, const BuildingDims& building) {
  require(theta_b_deg > 0 && theta_b_deg < 180,
          "make_cone: theta_b must lie in (0, 180) degrees");
  return assemble(axis, axis_foot, standoff, theta_b_deg / 2.0, building);
}

TruncatedCone make_cone_from_r_far(ConeAxis axis, const Vec2& axis_foot,
                                   double standoff, double r_far,
                                   const BuildingDims& building) {
  validate(building);
  require(r_far > 0, "make_cone_from_r_far: r_far must be positive");
  const double span = x_family(axis) ? building.x_b : building.z_b;
  const double half = std::atan(r_far / (standoff + span)) * 180.0 / kPi;
  return assemble(axis, axis_foot, standoff, half, building);
}

bool point_in_cone(const TruncatedCone& cone, const Vec3& p,
                   const BuildingDims& building) {
  if (!building.contains(p)) return false;
  const double a = axis_coord_of(cone.axis, p);
  const double lo = std::min(cone.near_plane, cone.far_plane);
  const double hi = std::max(cone.near_plane, cone.far_plane);
  if (a < lo - kGeomTol || a > hi + kGeomTol) return false;
  const double apex_dist = std::abs(axis_coord_of(cone.axis, cone.apex) - a);
  const double allowed = cone.radius_at(apex_dist) + kGeomTol;
  const Vec2 d = lateral_of(cone.axis, p) - cone.axis_foot;
  return d.squaredNorm() <= allowed * allowed;
}

std::pair<FacadeCircle, FacadeCircle> facade_projections(const TruncatedCone& cone) {
  Facade near_f, far_f;
  switch (cone.axis) {
    case ConeAxis::PlusX:
      near_f = Facade::A;
      far_f = Facade::B;
      break;
    case ConeAxis::MinusX:
      near_f = Facade::B;
      far_f = Facade::A;
      break;
    case ConeAxis::MinusZ:
    default:
      near_f = Facade::Roof;
      far_f = Facade::Floor;
      break;
  }
  return {FacadeCircle{near_f, cone.axis_foot, cone.r_near},
          FacadeCircle{far_f, cone.axis_foot, cone.r_far}};
}

namespace {

double radius_on_plane(const TruncatedCone& c, double plane) {
  // Both cones of a shared facade pair have |near_plane, far_plane| equal as a
  // set, but possibly swapped; pick the radius belonging to this plane.
  return std::abs(plane - c.near_plane) <= std::abs(plane - c.far_plane)
             ? c.r_near
             : c.r_far;
}

bool disjoint_sampled(const TruncatedCone& a, const TruncatedCone& b,
                      const BuildingDims& building) {
  // AABB of each cone, intersected; sampled at fixed resolution.
  auto aabb = [&](const TruncatedCone& c, Vec3& lo, Vec3& hi) {
    const double alo = std::min(c.near_plane, c.far_plane);
    const double ahi = std::max(c.near_plane, c.far_plane);
    if (x_family(c.axis)) {
      lo = Vec3(alo, c.axis_foot.x() - c.r_far, c.axis_foot.y() - c.r_far);
      hi = Vec3(ahi, c.axis_foot.x() + c.r_far, c.axis_foot.y() + c.r_far);
    } else {
      lo = Vec3(c.axis_foot.x() - c.r_far, c.axis_foot.y() - c.r_far, alo);
      hi = Vec3(c.axis_foot.x() + c.r_far, c.axis_foot.y() + c.r_far, ahi);
    }
    lo = lo.cwiseMax(Vec3::Zero());
    hi = hi.cwiseMin(Vec3(building.x_b, building.y_b, building.z_b));
  };
  Vec3 lo1, hi1, lo2, hi2;
  aabb(a, lo1, hi1);
  aabb(b, lo2, hi2);
  const Vec3 lo = lo1.cwiseMax(lo2);
  const Vec3 hi = hi1.cwiseMin(hi2);
  if ((hi - lo).minCoeff() <= 0) return true;
  for (double x = lo.x() + kCrossFamilyStep / 2; x < hi.x(); x += kCrossFamilyStep)
    for (double y = lo.y() + kCrossFamilyStep / 2; y < hi.y(); y += kCrossFamilyStep)
      for (double z = lo.z() + kCrossFamilyStep / 2; z < hi.z(); z += kCrossFamilyStep) {
        const Vec3 p(x, y, z);
        if (point_in_cone(a, p, building) && point_in_cone(b, p, building))
          return false;
      }
  return true;
}

}  // namespace

bool cones_disjoint(const TruncatedCone& a, const TruncatedCone& b,
                    const BuildingDims& building) {
  if (x_family(a.axis) != x_family(b.axis))
    return disjoint_sampled(a, b, building);
  // For a shared facade pair, 3D disjointness is equivalent to circle
  // disjointness on both facades: the per-depth radius sum is linear in the
  // axis coordinate, so its maximum over the span sits on a facade.
  const double dist = (a.axis_foot - b.axis_foot).norm();
  for (double plane : {a.near_plane, a.far_plane}) {
    const double sum = radius_on_plane(a, plane) + radius_on_plane(b, plane);
    if (dist < sum - kGeomTol) return false;
  }
  return true;
}

namespace {

// Antiderivative of sqrt(r^2 - t^2).
double circ_int(double t, double r) {
  t = std::clamp(t, -r, r);
  return 0.5 * (t * std::sqrt(std::max(0.0, r * r - t * t)) +
                r * r * std::asin(std::clamp(t / r, -1.0, 1.0)));
}

// Area of disc(0, r) within {X <= x, Y <= y}.
double quadrant_area(double x, double y, double r) {
  if (x <= -r || y <= -r) return 0.0;
  x = std::min(x, r);
  if (y >= r) return 2.0 * (circ_int(x, r) - circ_int(-r, r));
  const double s = std::sqrt(std::max(0.0, r * r - y * y));
  if (y >= 0) {
    double area = 0.0;
    const double x1 = std::min(x, -s);
    if (x1 > -r) area += 2.0 * (circ_int(x1, r) - circ_int(-r, r));
    if (x > -s) {
      const double x2 = std::min(x, s);
      area += (x2 + s) * y + (circ_int(x2, r) - circ_int(-s, r));
      if (x > s) area += 2.0 * (circ_int(x, r) - circ_int(s, r));
    }
    return area;
  }
  if (x <= -s) return 0.0;
  const double x2 = std::min(x, s);
  return (x2 + s) * y + (circ_int(x2, r) - circ_int(-s, r));
}

}  // namespace

double circle_rect_area(const Vec2& center, double radius, double u0, double u1,
                        double v0, double v1) {
  if (radius <= 0 || u1 <= u0 || v1 <= v0) return 0.0;
  const double a = center.x();
  const double b = center.y();
  return quadrant_area(u1 - a, v1 - b, radius) -
         quadrant_area(u0 - a, v1 - b, radius) -
         quadrant_area(u1 - a, v0 - b, radius) +
         quadrant_area(u0 - a, v0 - b, radius);
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kGlx[8] = {0.0950125098376374, 0.2816035507792589,
                            0.4580167776572274, 0.6178762444026438,
                            0.7554044083550030, 0.8656312023878318,
                            0.9445750230732326, 0.9894009349916499};
constexpr double kGlw[8] = {0.1894506104550685, 0.1826034150449236,
                            0.1691565193950025, 0.1495959888165767,
                            0.1246289712555339, 0.0951585116824928,
                            0.0622535239386479, 0.0271524594117541};

double gl16(double lo, double hi, auto&& f) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double acc = 0.0;
  for (int i = 0; i < 8; ++i)
    acc += kGlw[i] * (f(c - h * kGlx[i]) + f(c + h * kGlx[i]));
  return acc * h;
}

}  // namespace

double clipped_cone_volume(const TruncatedCone& cone, const BuildingDims& building) {
  const bool xf = x_family(cone.axis);
  const double u0 = 0.0, v0 = 0.0;
  const double u1 = xf ? building.y_b : building.x_b;
  const double v1 = xf ? building.z_b : building.y_b;
  const double span = cone.span();
  const double slope = (cone.r_far - cone.r_near) / span;
  auto rho = [&](double t) { return cone.r_near + slope * t; };
  auto area = [&](double t) {
    return circle_rect_area(cone.axis_foot, rho(t), u0, u1, v0, v1);
  };

  // The clipped area is smooth in t except where the circle reaches an edge
  // line or a corner; split the integral there.
  std::vector<double> cuts{0.0, span};
  const double a = cone.axis_foot.x();
  const double b = cone.axis_foot.y();
  auto add_cut = [&](double rho_star) {
    if (slope <= 0) return;
    const double t = (rho_star - cone.r_near) / slope;
    if (t > 1e-12 && t < span - 1e-12) cuts.push_back(t);
  };
  for (double d : {std::abs(a - u0), std::abs(u1 - a), std::abs(b - v0),
                   std::abs(v1 - b)})
    add_cut(d);
  for (double cu : {u0, u1})
    for (double cv : {v0, v1}) add_cut(std::hypot(a - cu, b - cv));
  std::sort(cuts.begin(), cuts.end());

  double vol = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    vol += gl16(cuts[i], cuts[i + 1], area);
  return vol;
}

bool cone_inside_facades(const TruncatedCone& cone, const BuildingDims& building,
                         double tol) {
  const bool xf = x_family(cone.axis);
  const double u1 = xf ? building.y_b : building.x_b;
  const double v1 = xf ? building.z_b : building.y_b;
  const double r = cone.r_far;
  return cone.axis_foot.x() >= r - tol && cone.axis_foot.x() <= u1 - r + tol &&
         cone.axis_foot.y() >= r - tol && cone.axis_foot.y() <= v1 - r + tol;
}

}  // namespace uavcov
