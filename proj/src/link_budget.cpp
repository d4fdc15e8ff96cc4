#include "uavcov/link_budget.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavcov {

namespace {

constexpr double kW = 20.0;   // distance/frequency slope
constexpr double kG1 = 32.4;  // free-space constant
constexpr double kG2 = 14.0;  // perpendicular penetration loss
constexpr double kG3 = 15.0;  // incidence-angle penalty
constexpr double kG4 = 0.5;   // indoor loss per meter

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

void validate(const RadioParams& p) {
  require(p.f_ghz > 0, "radio: f_ghz must be positive");
  require(p.theta_b_deg > 0 && p.theta_b_deg < 180,
          "radio: theta_b must lie in (0, 180) degrees");
  require(p.grf_db >= 0, "radio: grf_db must be nonnegative");
}

double tx_antenna_gain_db(double theta_b_deg) {
  require(theta_b_deg > 0 && theta_b_deg < 180,
          "tx_antenna_gain_db: theta_b must lie in (0, 180) degrees");
  return 10.0 * std::log10(29000.0 / (theta_b_deg * theta_b_deg));
}

double rx_antenna_gain_db(const RadioParams& params) {
  return params.g_r_dir_db + params.g_r_omni_db - params.grf_db;
}

PathLossBreakdown path_loss_db(const Vec3& uav, const Vec3& user, Facade facade,
                               const BuildingDims& building, double f_ghz) {
  require(f_ghz > 0, "path_loss_db: f_ghz must be positive");
  require(building.contains(user), "path_loss_db: user must be inside the building");

  Vec3 inward_normal;
  double depth = 0;
  switch (facade) {
    case Facade::A:
      require(uav.x() < 0, "path_loss_db: transmitter must be outside facade A");
      inward_normal = Vec3(1, 0, 0);
      depth = user.x();
      break;
    case Facade::B:
      require(uav.x() > building.x_b,
              "path_loss_db: transmitter must be outside facade B");
      inward_normal = Vec3(-1, 0, 0);
      depth = building.x_b - user.x();
      break;
    case Facade::Roof:
      require(uav.z() > building.z_b,
              "path_loss_db: transmitter must be above the roof");
      inward_normal = Vec3(0, 0, -1);
      depth = building.z_b - user.z();
      break;
    case Facade::Floor:
    default:
      throw std::domain_error("path_loss_db: no transmitters below the building");
  }

  PathLossBreakdown out;
  const Vec3 ray = user - uav;
  out.d_3d = ray.norm();
  out.d_2d = std::max(0.0, depth);
  const double c = std::clamp(ray.normalized().dot(inward_normal), -1.0, 1.0);
  out.theta_i = std::acos(c);
  out.l_f = kW * std::log10(out.d_3d) + kW * std::log10(f_ghz) + kG1;
  out.l_b = kG2 + kG3 * (1.0 - c) * (1.0 - c);
  out.l_i = kG4 * out.d_2d;
  out.total = out.l_f + out.l_b + out.l_i;
  return out;
}

double received_power_dbm(double p_t_dbm, const RadioParams& params,
                          const PathLossBreakdown& loss) {
  return p_t_dbm + tx_antenna_gain_db(params.theta_b_deg) +
         rx_antenna_gain_db(params) - loss.total;
}

namespace {

Facade penetrated_facade(const TruncatedCone& cone) {
  switch (cone.axis) {
    case ConeAxis::PlusX:
      return Facade::A;
    case ConeAxis::MinusX:
      return Facade::B;
    case ConeAxis::MinusZ:
    default:
      return Facade::Roof;
  }
}

}  // namespace

double min_tx_power_dbm(const TruncatedCone& cone, const BuildingDims& building,
                        const RadioParams& params, double grid_step) {
  require(grid_step > 0, "min_tx_power_dbm: grid_step must be positive");
  validate(params);
  const Facade facade = penetrated_facade(cone);
  const double g_fixed = tx_antenna_gain_db(params.theta_b_deg) +
                         rx_antenna_gain_db(params);

  // Restrict the lattice scan to the cone's bounding box.
  const Vec3 dims(building.x_b, building.y_b, building.z_b);
  Vec3 lo = Vec3::Zero();
  Vec3 hi = dims;
  if (x_family(cone.axis)) {
    lo.y() = cone.axis_foot.x() - cone.r_far;
    hi.y() = cone.axis_foot.x() + cone.r_far;
    lo.z() = cone.axis_foot.y() - cone.r_far;
    hi.z() = cone.axis_foot.y() + cone.r_far;
  } else {
    lo.x() = cone.axis_foot.x() - cone.r_far;
    hi.x() = cone.axis_foot.x() + cone.r_far;
    lo.y() = cone.axis_foot.y() - cone.r_far;
    hi.y() = cone.axis_foot.y() + cone.r_far;
  }

  auto first_index = [&](double v) {
    return std::max<long>(0, static_cast<long>(std::floor(v / grid_step)));
  };
  auto last_index = [&](double v, double dim) {
    const long n = static_cast<long>(std::floor(dim / grid_step + kGeomTol));
    return std::min<long>(n - 1, static_cast<long>(std::floor(v / grid_step)));
  };

  double worst = -std::numeric_limits<double>::infinity();
  bool hit = false;
  for (long i = first_index(lo.x()); i <= last_index(hi.x(), dims.x()); ++i)
    for (long j = first_index(lo.y()); j <= last_index(hi.y(), dims.y()); ++j)
      for (long k = first_index(lo.z()); k <= last_index(hi.z(), dims.z()); ++k) {
        const Vec3 p((i + 0.5) * grid_step, (j + 0.5) * grid_step,
                     (k + 0.5) * grid_step);
        if (!point_in_cone(cone, p, building)) continue;
        const PathLossBreakdown loss =
            path_loss_db(cone.apex, p, facade, building, params.f_ghz);
        const double need = params.snr_min_db + params.noise_dbm - g_fixed +
                            loss.total;
        worst = std::max(worst, need);
        hit = true;
      }
  require(hit, "min_tx_power_dbm: no grid point inside the cone");
  return worst;
}

double total_tx_power_mw(std::span<const TruncatedCone> cones,
                         const BuildingDims& building, const RadioParams& params,
                         double grid_step) {
  double total = 0.0;
  for (const TruncatedCone& c : cones)
    total += dbm_to_mw(min_tx_power_dbm(c, building, params, grid_step));
  return total;
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

}  // namespace uavcov
