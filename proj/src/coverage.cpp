#include "uavcov/coverage.hpp"

#include "uavcov/rng.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace uavcov {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

struct VoxelGrid {
  double v = 0;
  long nx = 0, ny = 0, nz = 0;
  Vec3 dims = Vec3::Zero();

  long count() const { return nx * ny * nz; }
  long index(long i, long j, long k) const { return (i * ny + j) * nz + k; }
  Vec3 center(long i, long j, long k) const {
    return Vec3((i + 0.5) * v, (j + 0.5) * v, (k + 0.5) * v);
  }
};

VoxelGrid make_grid(const BuildingDims& b, double voxel_size) {
  VoxelGrid g;
  g.v = voxel_size;
  g.dims = Vec3(b.x_b, b.y_b, b.z_b);
  auto n_of = [&](double dim) {
    return std::max<long>(1, static_cast<long>(std::floor(dim / voxel_size + 0.5 - 1e-9)));
  };
  g.nx = n_of(b.x_b);
  g.ny = n_of(b.y_b);
  g.nz = n_of(b.z_b);
  return g;
}

// Index range of voxels whose centers may fall inside [lo, hi].
void center_range(const VoxelGrid& g, double lo, double hi, long n, long& i0,
                  long& i1) {
  i0 = std::max<long>(0, static_cast<long>(std::floor(lo / g.v - 0.5)));
  i1 = std::min<long>(n - 1, static_cast<long>(std::ceil(hi / g.v - 0.5)));
}

void cone_index_box(const VoxelGrid& g, const TruncatedCone& c, long& i0, long& i1,
                    long& j0, long& j1, long& k0, long& k1) {
  Vec3 lo, hi;
  if (x_family(c.axis)) {
    lo = Vec3(0, c.axis_foot.x() - c.r_far, c.axis_foot.y() - c.r_far);
    hi = Vec3(g.dims.x(), c.axis_foot.x() + c.r_far, c.axis_foot.y() + c.r_far);
  } else {
    lo = Vec3(c.axis_foot.x() - c.r_far, c.axis_foot.y() - c.r_far, 0);
    hi = Vec3(c.axis_foot.x() + c.r_far, c.axis_foot.y() + c.r_far, g.dims.z());
  }
  center_range(g, lo.x(), hi.x(), g.nx, i0, i1);
  center_range(g, lo.y(), hi.y(), g.ny, j0, j1);
  center_range(g, lo.z(), hi.z(), g.nz, k0, k1);
}

// Marks voxels whose center lies inside the cone.
void mark_centers(const VoxelGrid& g, const TruncatedCone& c,
                  const BuildingDims& b, std::vector<std::uint8_t>& covered) {
  long i0, i1, j0, j1, k0, k1;
  cone_index_box(g, c, i0, i1, j0, j1, k0, k1);
  for (long i = i0; i <= i1; ++i)
    for (long j = j0; j <= j1; ++j)
      for (long k = k0; k <= k1; ++k)
        if (!covered[g.index(i, j, k)] &&
            point_in_cone(c, g.center(i, j, k), b))
          covered[g.index(i, j, k)] = 1;
}

// Whole-voxel membership: the cone region (cone ∩ slab ∩ building) is convex,
// so the voxel box (clamped to the building) is inside iff its corners are.
// Evaluated in closed form: all four lateral corners within the cross-section
// radius at the voxel face closest to the apex.
bool voxel_fully_inside(const VoxelGrid& g, const TruncatedCone& c, long i, long j,
                        long k) {
  const double x0 = i * g.v, x1 = std::min((i + 1) * g.v, g.dims.x());
  const double y0 = j * g.v, y1 = std::min((j + 1) * g.v, g.dims.y());
  const double z0 = k * g.v, z1 = std::min((k + 1) * g.v, g.dims.z());
  double a_lo, a_hi, u0, u1, v0, v1;
  if (x_family(c.axis)) {
    a_lo = x0;
    a_hi = x1;
    u0 = y0;
    u1 = y1;
    v0 = z0;
    v1 = z1;
  } else {
    a_lo = z0;
    a_hi = z1;
    u0 = x0;
    u1 = x1;
    v0 = y0;
    v1 = y1;
  }
  const double apex_a = axis_coord_of(c.axis, c.apex);
  const double shallow = std::min(std::abs(apex_a - a_lo), std::abs(apex_a - a_hi));
  const double r0 = c.radius_at(shallow) + kGeomTol;
  const double du = std::max(std::abs(u0 - c.axis_foot.x()),
                             std::abs(u1 - c.axis_foot.x()));
  const double dv = std::max(std::abs(v0 - c.axis_foot.y()),
                             std::abs(v1 - c.axis_foot.y()));
  return du * du + dv * dv <= r0 * r0;
}

}  // namespace

CoverageReport mc_coverage(const DeploymentPlan& plan, const BuildingDims& building,
                           long n_samples, std::uint64_t seed) {
  require(n_samples >= 10000, "mc_coverage: need at least 1e4 samples");
  validate(building);

  CoverageReport report;
  report.n_samples = n_samples;
  report.seed = seed;
  report.analytic_fraction = plan_coverage_summary(plan, building).fraction;

  SplitMix64 rng(seed);
  long covered = 0, overlaps = 0;
  for (long s = 0; s < n_samples; ++s) {
    const Vec3 p(rng.uniform() * building.x_b, rng.uniform() * building.y_b,
                 rng.uniform() * building.z_b);
    int hits = 0;
    for (const PlannedUav& u : plan.uavs) {
      if (point_in_cone(u.cone, p, building)) {
        if (++hits == 2) break;
      }
    }
    if (hits >= 1) ++covered;
    if (hits >= 2) ++overlaps;
  }
  const double p_hat = static_cast<double>(covered) / n_samples;
  report.mc_fraction = p_hat;
  report.mc_halfwidth_95 =
      1.96 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n_samples));
  report.overlap_violations = overlaps;
  return report;
}

double facade_coverage_index(const DeploymentPlan& plan,
                             const BuildingDims& building) {
  for (const PlannedUav& u : plan.uavs)
    require(x_family(u.cone.axis),
            "facade_coverage_index: plan must use x-axis cones");
  double area = 0.0;
  for (const PlannedUav& u : plan.uavs) {
    const auto [near_c, far_c] = facade_projections(u.cone);
    for (const FacadeCircle& fc : {near_c, far_c})
      area += circle_rect_area(fc.center, fc.radius, 0, building.y_b, 0,
                               building.z_b);
  }
  return area / (building.y_b * building.z_b);
}

HoleSet find_holes(const DeploymentPlan& plan, const BuildingDims& building,
                   double voxel_size) {
  validate(building);
  const double min_dim = std::min({building.x_b, building.y_b, building.z_b});
  require(voxel_size > 0 && voxel_size <= min_dim / 4.0,
          "find_holes: voxel_size must be in (0, min_dim/4]");

  const VoxelGrid g = make_grid(building, voxel_size);
  std::vector<std::uint8_t> covered(g.count(), 0);
  for (const PlannedUav& u : plan.uavs)
    mark_centers(g, u.cone, building, covered);

  HoleSet holes;
  holes.voxel_size = voxel_size;

  std::vector<std::int32_t> label(g.count(), -1);
  std::deque<long> queue;
  for (long i = 0; i < g.nx; ++i)
    for (long j = 0; j < g.ny; ++j)
      for (long k = 0; k < g.nz; ++k) {
        const long id = g.index(i, j, k);
        if (covered[id] || label[id] >= 0) continue;
        const auto comp_id = static_cast<std::int32_t>(holes.components.size());
        HoleComponent comp;
        long imin = i, imax = i, jmin = j, jmax = j, kmin = k, kmax = k;
        label[id] = comp_id;
        queue.push_back(id);
        while (!queue.empty()) {
          const long cur = queue.front();
          queue.pop_front();
          ++comp.voxels;
          const long ci = cur / (g.ny * g.nz);
          const long cj = (cur / g.nz) % g.ny;
          const long ck = cur % g.nz;
          imin = std::min(imin, ci);
          imax = std::max(imax, ci);
          jmin = std::min(jmin, cj);
          jmax = std::max(jmax, cj);
          kmin = std::min(kmin, ck);
          kmax = std::max(kmax, ck);
          const long di[6] = {1, -1, 0, 0, 0, 0};
          const long dj[6] = {0, 0, 1, -1, 0, 0};
          const long dk[6] = {0, 0, 0, 0, 1, -1};
          for (int d = 0; d < 6; ++d) {
            const long ni = ci + di[d], nj = cj + dj[d], nk = ck + dk[d];
            if (ni < 0 || ni >= g.nx || nj < 0 || nj >= g.ny || nk < 0 ||
                nk >= g.nz)
              continue;
            const long nid = g.index(ni, nj, nk);
            if (covered[nid] || label[nid] >= 0) continue;
            label[nid] = comp_id;
            queue.push_back(nid);
          }
        }
        comp.bbox_min = Vec3(imin * g.v, jmin * g.v, kmin * g.v);
        comp.bbox_max =
            Vec3(std::min((imax + 1) * g.v, building.x_b),
                 std::min((jmax + 1) * g.v, building.y_b),
                 std::min((kmax + 1) * g.v, building.z_b));
        holes.uncovered_voxels += comp.voxels;
        holes.components.push_back(comp);
      }
  return holes;
}

namespace {

struct FootGrid {
  ConeAxis axis = ConeAxis::PlusX;
  double standoff = 0;
  long nu = 0, nv = 0;  // lateral lattice of candidate feet (voxel centers)
  std::vector<long> votes;
  // Conservative foot-disc radius per depth layer: a foot within this radius
  // of a voxel's lateral center is guaranteed to fully cover the voxel.
  std::vector<double> disc_radius;

  long index(long u, long v) const { return u * nv + v; }
};

}  // namespace

Augmentation augment_full_coverage(const DeploymentPlan& plan,
                                   const BuildingDims& building,
                                   double voxel_size) {
  validate(building);
  require(plan.theta_b_deg > 0 && plan.theta_b_deg < 180,
          "augment_full_coverage: plan carries no valid beamwidth");
  const double min_dim = std::min({building.x_b, building.y_b, building.z_b});
  require(voxel_size > 0 && voxel_size <= min_dim / 4.0,
          "augment_full_coverage: voxel_size must be in (0, min_dim/4]");

  const VoxelGrid g = make_grid(building, voxel_size);
  const double tan_half =
      std::tan(plan.theta_b_deg * 0.5 * 3.14159265358979323846 / 180.0);
  const double h_diag = voxel_size * 0.5 * std::sqrt(2.0);

  // covered == voxel fully inside some cone.
  std::vector<std::uint8_t> covered(g.count(), 0);
  auto mark_full = [&](const TruncatedCone& c, auto&& on_newly_covered) {
    long i0, i1, j0, j1, k0, k1;
    cone_index_box(g, c, i0, i1, j0, j1, k0, k1);
    for (long i = i0; i <= i1; ++i)
      for (long j = j0; j <= j1; ++j)
        for (long k = k0; k <= k1; ++k) {
          const long id = g.index(i, j, k);
          if (!covered[id] && voxel_fully_inside(g, c, i, j, k)) {
            covered[id] = 1;
            on_newly_covered(i, j, k);
          }
        }
  };
  for (const PlannedUav& u : plan.uavs)
    mark_full(u.cone, [](long, long, long) {});

  // Extras reuse the plan's beamwidth and standoff and stay on the method's
  // own facades: one-side methods keep every UAV on their side, while the
  // two-side arrangement may fill each side's holes from the opposite side.
  std::vector<FootGrid> families;
  switch (plan.method) {
    case Method::FOBS:
      families.resize(1);
      families[0].axis = ConeAxis::PlusX;
      break;
    case Method::ABS:
      families.resize(1);
      families[0].axis = ConeAxis::MinusZ;
      break;
    case Method::AUDA:
    default:
      families.resize(2);
      families[0].axis = ConeAxis::PlusX;
      families[1].axis = ConeAxis::MinusX;
      break;
  }
  for (FootGrid& f : families) {
    const bool xf = x_family(f.axis);
    f.standoff = plan.standoff > 0
                     ? plan.standoff
                     : auda_offset(xf ? building.x_b : building.z_b);
    f.nu = xf ? g.ny : g.nx;
    f.nv = xf ? g.nz : g.ny;
    f.votes.assign(f.nu * f.nv, 0);
    const long depth_layers = xf ? g.nx : g.nz;
    f.disc_radius.assign(depth_layers, 0.0);
    const double span = xf ? building.x_b : building.z_b;
    for (long d = 0; d < depth_layers; ++d) {
      // Distance from the apex to the voxel face nearest it.
      double shallow;
      if (f.axis == ConeAxis::PlusX) {
        shallow = f.standoff + d * g.v;
      } else {
        // -x and -z beams enter from the high coordinate side.
        shallow = f.standoff + span - std::min((d + 1) * g.v, span);
      }
      f.disc_radius[d] = shallow * tan_half - h_diag;
    }
  }

  auto lateral_index = [&](const FootGrid& f, long i, long j, long k, long& u,
                           long& v) {
    if (x_family(f.axis)) {
      u = j;
      v = k;
    } else {
      u = i;
      v = j;
    }
  };
  auto depth_index = [&](const FootGrid& f, long i, long k) {
    return x_family(f.axis) ? i : k;
  };

  auto for_feet_in_disc = [&](const FootGrid& f, long cu, long cv, double q,
                              auto&& fn) {
    if (q <= 0) return;
    const long rad = static_cast<long>(std::floor(q / g.v));
    for (long du = -rad; du <= rad; ++du) {
      const long u = cu + du;
      if (u < 0 || u >= f.nu) continue;
      for (long dv = -rad; dv <= rad; ++dv) {
        const long v = cv + dv;
        if (v < 0 || v >= f.nv) continue;
        const double dd = (du * du + dv * dv) * g.v * g.v;
        if (dd <= q * q) fn(u, v);
      }
    }
  };

  auto adjust_votes = [&](long i, long j, long k, long delta) {
    for (FootGrid& f : families) {
      long cu, cv;
      lateral_index(f, i, j, k, cu, cv);
      const double q = f.disc_radius[depth_index(f, i, k)];
      for_feet_in_disc(f, cu, cv, q,
                       [&](long u, long v) { f.votes[f.index(u, v)] += delta; });
    }
  };

  long remaining = 0;
  for (long i = 0; i < g.nx; ++i)
    for (long j = 0; j < g.ny; ++j)
      for (long k = 0; k < g.nz; ++k)
        if (!covered[g.index(i, j, k)]) {
          ++remaining;
          adjust_votes(i, j, k, +1);
        }

  Augmentation out;
  while (remaining > 0) {
    int best_f = -1;
    long best_u = 0, best_v = 0, best_votes = 0;
    for (int fi = 0; fi < static_cast<int>(families.size()); ++fi) {
      const FootGrid& f = families[fi];
      for (long u = 0; u < f.nu; ++u)
        for (long v = 0; v < f.nv; ++v)
          if (f.votes[f.index(u, v)] > best_votes) {
            best_votes = f.votes[f.index(u, v)];
            best_f = fi;
            best_u = u;
            best_v = v;
          }
    }
    if (best_f < 0)
      throw std::runtime_error(
          "augment_full_coverage: beam too narrow to cover a whole voxel");
    const FootGrid& f = families[best_f];
    const Vec2 foot((best_u + 0.5) * g.v, (best_v + 0.5) * g.v);
    TruncatedCone cone =
        make_cone(f.axis, foot, f.standoff, plan.theta_b_deg, building);
    mark_full(cone, [&](long i, long j, long k) {
      adjust_votes(i, j, k, -1);
      --remaining;
    });
    out.cones.push_back(cone);
  }
  out.extra_uavs = static_cast<int>(out.cones.size());
  return out;
}

}  // namespace uavcov
