#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deform/units.hpp"

namespace deform::bounds {

/// Measured and predicted 1s Lamb shift, MHz. Uncertainties are carried but not propagated.
struct LambData {
  double L_exp_MHz = 8172.837;
  double L_theor_MHz = 8172.731;
  double L_exp_sigma_MHz = 0.022;
  double L_theor_sigma_MHz = 0.040;
};

/// Reference-work bounds from a cut-off method, for annotation only.
inline constexpr double kCutoffBoundEtaThird_m = 1.13e-16;
inline constexpr double kCutoffBoundEtaOne_m = 2.87e-17;

struct BoundPoint {
  double eta = 0.0;
  double xi = 0.0;
  double dx_min_m = 0.0;
};

/// One node of a sweep: either a point or the reason the node failed.
struct BoundNode {
  double eta = 0.0;
  std::optional<BoundPoint> point;
  std::string error;
};

/// L_exp - L_theor in MHz. Throws InvalidData unless the experiment exceeds theory.
double lamb_discrepancy(const LambData& data);

/// xi such that the 1s correction, in MHz, equals the discrepancy.
///
/// Bisection with secant refinement on a bracket starting at [1e-9, 1e-2] and
/// expanded geometrically. Throws OutOfDomain for eta outside [1/3, 1] or a
/// non-positive discrepancy, NoRoot when no bracket exists and NonMonotone when
/// expansion walks past the maximum of the correction.
double solve_xi(double eta, double discrepancy_MHz, const PhysConstants& c = constants());

/// xi in closed form for eta = 1/3, where the correction is 5 xi^2 / 3 Hartree.
double solve_xi_commuting(double discrepancy_MHz, const PhysConstants& c = constants());

/// One node per grid value; per-node failures are recorded rather than thrown.
/// Throws OutOfDomain if the grid is not strictly increasing.
std::vector<BoundNode> bound_curve(std::span<const double> eta_grid, const LambData& data,
                                   const PhysConstants& c = constants());

}  // namespace deform::bounds
