// Equal-circles-in-a-rectangle decision problem and the incremental
// maximization loop: solve feasibility for N = 1, 2, ... until the first
// failure. Feasible verdicts are certificates (centers are returned and
// re-checkable); infeasible verdicts are heuristic solver failures.
#pragma once

#include "uavcov/geometry.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace uavcov {

struct PackingInstance {
  int n = 1;       // circle count
  double r = 0;    // common radius
  double d1 = 0;   // rectangle width
  double d2 = 0;   // rectangle height
};

struct PackingSolution {
  bool feasible = false;
  std::vector<Vec2> centers;
  double residual = 0;  // worst constraint violation, meters
  std::uint64_t seed = 0;
  int restarts_used = 0;
};

inline constexpr double kPackingTol = 1e-6;
inline constexpr int kDefaultRestarts = 50;
inline constexpr int kDefaultMaxIters = 2000;

/// Worst violation of the packing constraints for a candidate center list:
/// max over pairwise deficits (2r - dist) and per-circle edge deficits.
/// Independent of the solver; used to certify feasible verdicts.
double packing_residual(const PackingInstance& inst, std::span<const Vec2> centers);

/// Multi-start gradient descent with backtracking line search on the smooth
/// penalty sum of squared violations. Restart 0 is warm-started from the
/// rectangular grid arrangement whenever n fits on the grid; the remaining
/// restarts draw uniform centers from a per-restart seeded generator.
/// Deterministic for fixed (instance, seed, restarts, max_iters); the first
/// feasible restart in seed order wins.
PackingSolution packing_decision(const PackingInstance& inst, std::uint64_t seed,
                                 int restarts = kDefaultRestarts,
                                 int max_iters = kDefaultMaxIters);

struct MaxCirclesResult {
  int n = 0;
  PackingSolution best;  // empty when even n = 1 fails
};

/// Increment N until the decision problem fails; returns N-1 and the last
/// feasible solution. Guaranteed >= grid_lower_bound by the grid warm start.
MaxCirclesResult max_circles(double r, double d1, double d2, std::uint64_t seed,
                             int restarts = kDefaultRestarts,
                             int max_iters = kDefaultMaxIters);

/// floor(d1/2r) * floor(d2/2r).
int grid_lower_bound(double r, double d1, double d2);

}  // namespace uavcov
