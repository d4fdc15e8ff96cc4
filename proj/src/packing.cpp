#include "uavcov/packing.hpp"

#include "uavcov/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavcov {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

void validate(const PackingInstance& inst) {
  require(inst.n >= 1, "packing: n must be >= 1");
  require(inst.r > 0 && inst.d1 > 0 && inst.d2 > 0,
          "packing: radius and rectangle dimensions must be positive");
}

// Penalty: sum over pairs of max(0, 2r - dist)^2 plus per-circle squared
// out-of-rectangle excess. C^1, zero exactly on the feasible set.
double penalty(const PackingInstance& inst, const std::vector<Vec2>& c,
               std::vector<Vec2>* grad) {
  const double two_r = 2.0 * inst.r;
  if (grad) std::fill(grad->begin(), grad->end(), Vec2::Zero().eval());
  double e = 0.0;
  const int n = inst.n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vec2 d = c[i] - c[j];
      const double dist = std::max(d.norm(), 1e-12);
      const double h = two_r - dist;
      if (h > 0) {
        e += h * h;
        if (grad) {
          const Vec2 g = (-2.0 * h / dist) * d;
          (*grad)[i] += g;
          (*grad)[j] -= g;
        }
      }
    }
    auto edge = [&](double coord, double lo, double hi, int axis) {
      const double under = lo - coord;
      const double over = coord - hi;
      if (under > 0) {
        e += under * under;
        if (grad) (*grad)[i][axis] += -2.0 * under;
      } else if (over > 0) {
        e += over * over;
        if (grad) (*grad)[i][axis] += 2.0 * over;
      }
    };
    edge(c[i].x(), inst.r, inst.d1 - inst.r, 0);
    edge(c[i].y(), inst.r, inst.d2 - inst.r, 1);
  }
  return e;
}

// Gradient descent with Armijo backtracking; the step carries over between
// iterations. Stops once the penalty is far below the feasibility tolerance.
void descend(const PackingInstance& inst, std::vector<Vec2>& c, int max_iters) {
  constexpr double kStopEnergy = 1e-16;
  constexpr double kArmijo = 1e-4;
  std::vector<Vec2> grad(c.size()), trial(c.size());
  double step = inst.r;
  double e = penalty(inst, c, &grad);
  for (int it = 0; it < max_iters && e > kStopEnergy; ++it) {
    double g2 = 0.0;
    for (const Vec2& g : grad) g2 += g.squaredNorm();
    if (g2 < 1e-30) break;
    double t = step;
    bool moved = false;
    for (int ls = 0; ls < 40; ++ls) {
      for (std::size_t k = 0; k < c.size(); ++k) trial[k] = c[k] - t * grad[k];
      const double e_new = penalty(inst, trial, nullptr);
      if (e_new <= e - kArmijo * t * g2) {
        c.swap(trial);
        e = penalty(inst, c, &grad);
        step = t * 2.0;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) break;
  }
}

std::vector<Vec2> grid_points(const PackingInstance& inst) {
  std::vector<Vec2> pts;
  const int cols = static_cast<int>(std::floor(inst.d1 / (2 * inst.r) + kGeomTol));
  const int rows = static_cast<int>(std::floor(inst.d2 / (2 * inst.r) + kGeomTol));
  for (int j = 0; j < rows; ++j)
    for (int i = 0; i < cols; ++i)
      pts.emplace_back(inst.r * (2 * i + 1), inst.r * (2 * j + 1));
  return pts;
}

}  // namespace

double packing_residual(const PackingInstance& inst, std::span<const Vec2> centers) {
  double worst = 0.0;
  const double two_r = 2.0 * inst.r;
  const int n = static_cast<int>(centers.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      worst = std::max(worst, two_r - (centers[i] - centers[j]).norm());
    worst = std::max({worst, inst.r - centers[i].x(),
                      centers[i].x() - (inst.d1 - inst.r),
                      inst.r - centers[i].y(),
                      centers[i].y() - (inst.d2 - inst.r)});
  }
  return std::max(0.0, worst);
}

PackingSolution packing_decision(const PackingInstance& inst, std::uint64_t seed,
                                 int restarts, int max_iters) {
  validate(inst);
  require(restarts >= 1 && max_iters >= 1,
          "packing: restarts and max_iters must be >= 1");

  PackingSolution best;
  best.seed = seed;

  // No center box at all: provably infeasible, skip the solver.
  if (2.0 * inst.r > std::min(inst.d1, inst.d2) + kPackingTol) {
    best.feasible = false;
    best.residual = 2.0 * inst.r - std::min(inst.d1, inst.d2);
    best.restarts_used = 0;
    return best;
  }

  const std::vector<Vec2> grid = grid_points(inst);
  double best_residual = std::numeric_limits<double>::infinity();

  for (int k = 0; k < restarts; ++k) {
    std::vector<Vec2> c(inst.n);
    if (k == 0 && static_cast<int>(grid.size()) >= inst.n) {
      std::copy_n(grid.begin(), inst.n, c.begin());
    } else {
      SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(k)));
      for (Vec2& p : c)
        p = Vec2(rng.uniform(inst.r, inst.d1 - inst.r),
                 rng.uniform(inst.r, inst.d2 - inst.r));
    }
    descend(inst, c, max_iters);
    const double res = packing_residual(inst, c);
    if (res < best_residual) {
      best_residual = res;
      best.centers = c;
      best.residual = res;
    }
    if (res <= kPackingTol) {
      best.feasible = true;
      best.centers = std::move(c);
      best.residual = res;
      best.restarts_used = k + 1;
      return best;
    }
  }
  best.feasible = false;
  best.restarts_used = restarts;
  return best;
}

MaxCirclesResult max_circles(double r, double d1, double d2, std::uint64_t seed,
                             int restarts, int max_iters) {
  require(r > 0 && d1 > 0 && d2 > 0, "max_circles: inputs must be positive");
  MaxCirclesResult out;
  out.best.seed = seed;
  for (int n = 1;; ++n) {
    PackingSolution s = packing_decision({n, r, d1, d2}, seed, restarts, max_iters);
    if (!s.feasible) break;
    out.n = n;
    out.best = std::move(s);
  }
  return out;
}

int grid_lower_bound(double r, double d1, double d2) {
  if (r <= 0 || d1 <= 0 || d2 <= 0)
    throw std::domain_error("grid_lower_bound: inputs must be positive");
  const int a = static_cast<int>(std::floor(d1 / (2.0 * r) + kGeomTol));
  const int b = static_cast<int>(std::floor(d2 / (2.0 * r) + kGeomTol));
  return a * b;
}

}  // namespace uavcov
