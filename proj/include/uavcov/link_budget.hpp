// Deterministic outdoor-to-indoor link budget: directional transmit gain,
// receiver gain composition, free-space + penetration + indoor path loss,
// and the worst-case transmit power needed to hold an SNR floor everywhere
// inside a coverage cone.
#pragma once

#include "uavcov/geometry.hpp"

#include <span>

namespace uavcov {

struct RadioParams {
  double f_ghz = 2.0;        // carrier frequency
  double theta_b_deg = 0;    // half-power beamwidth driving the tx gain
  double snr_min_db = 25.0;  // SNR floor
  double noise_dbm = -120.0;
  double g_r_dir_db = 14.4;  // directive receiver gain
  double g_r_omni_db = 0.0;  // omni reference gain
  double grf_db = 0.0;       // clutter-induced loss of the directive advantage
};

/// Throws std::domain_error on out-of-range fields.
void validate(const RadioParams& p);

struct PathLossBreakdown {
  double d_3d = 0;     // transmitter-to-user distance, m
  double d_2d = 0;     // perpendicular indoor depth behind the facade, m
  double theta_i = 0;  // incidence angle vs the inward facade normal, rad
  double l_f = 0;      // free-space term, dB
  double l_b = 0;      // penetration term, dB
  double l_i = 0;      // indoor term, dB
  double total = 0;    // l_f + l_b + l_i
};

/// 10*log10(29000 / theta_b^2), theta_b in degrees.
double tx_antenna_gain_db(double theta_b_deg);

/// g_r_dir + g_r_omni - grf.
double rx_antenna_gain_db(const RadioParams& params);

/// L_F = 20 log10(d_3d) + 20 log10(f_ghz) + 32.4
/// L_B = 14 + 15 (1 - cos theta_i)^2
/// L_I = 0.5 * d_2d
/// The user must be inside the building and the transmitter outside it, on
/// the side of the stated facade.
PathLossBreakdown path_loss_db(const Vec3& uav, const Vec3& user, Facade facade,
                               const BuildingDims& building, double f_ghz);

/// p_t + G_t + G_r - loss.total.
double received_power_dbm(double p_t_dbm, const RadioParams& params,
                          const PathLossBreakdown& loss);

/// Worst-case transmit power over the cone interior: the interior is sampled
/// on the voxel-center lattice (i+1/2)*grid_step of the building box, and the
/// per-point requirement p_t = snr_min + noise - G_t - G_r + L is maximized.
/// Throws std::domain_error when no lattice point falls inside the cone.
double min_tx_power_dbm(const TruncatedCone& cone, const BuildingDims& building,
                        const RadioParams& params, double grid_step = 0.5);

/// Sum of per-cone minimum powers, in mW.
double total_tx_power_mw(std::span<const TruncatedCone> cones,
                         const BuildingDims& building, const RadioParams& params,
                         double grid_step = 0.5);

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

}  // namespace uavcov
