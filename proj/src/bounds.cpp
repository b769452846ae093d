#include "deform/bounds.hpp"

#include <cmath>
#include <string>

#include "deform/errors.hpp"
#include "deform/spectrum.hpp"

namespace deform::bounds {

namespace {

constexpr double kBracketLow = 1e-9;
constexpr double kBracketHigh = 1e-2;
constexpr double kRelWidth = 1e-12;
constexpr int kMaxExpansions = 60;
constexpr int kMaxIterations = 400;

}  // namespace

double lamb_discrepancy(const LambData& data) {
  if (!std::isfinite(data.L_exp_MHz) || !std::isfinite(data.L_theor_MHz))
    throw InvalidData("Lamb shift values must be finite");
  if (!(data.L_exp_MHz > data.L_theor_MHz))
    throw InvalidData("experimental Lamb shift must exceed the theoretical value");
  return data.L_exp_MHz - data.L_theor_MHz;
}

double solve_xi_commuting(double discrepancy_MHz, const PhysConstants& c) {
  if (!(discrepancy_MHz > 0.0)) throw OutOfDomain("discrepancy must be positive");
  return std::sqrt(discrepancy_MHz / c.hartree_MHz * 3.0 / 5.0);
}

double solve_xi(double eta, double discrepancy_MHz, const PhysConstants& c) {
  if (!(eta >= 1.0 / 3.0 && eta <= 1.0)) throw OutOfDomain("eta must lie in [1/3, 1]");
  if (!(discrepancy_MHz > 0.0) || !std::isfinite(discrepancy_MHz))
    throw OutOfDomain("discrepancy must be positive and finite");

  const double target = discrepancy_MHz / c.hartree_MHz;
  auto residual = [&](double xi) { return spectrum::correction_1s_xi_eta(xi, eta).magnitude - target; };

  double lo = kBracketLow, hi = kBracketHigh;
  double f_lo = residual(lo), f_hi = residual(hi);
  for (int i = 0; f_lo > 0.0; ++i) {
    if (i == kMaxExpansions) throw NoRoot("cannot bracket xi from below");
    hi = lo;
    f_hi = f_lo;
    lo *= 0.1;
    f_lo = residual(lo);
  }
  for (int i = 0; f_hi < 0.0; ++i) {
    if (i == kMaxExpansions) throw NoRoot("cannot bracket xi from above");
    const double next = hi * 4.0;
    const double f_next = residual(next);
    // The correction has a single maximum; a drop means we are past it and
    // the equation may have a second root beyond.
    if (f_next < f_hi) throw NonMonotone("1s correction stops increasing before reaching the discrepancy");
    lo = hi;
    f_lo = f_hi;
    hi = next;
    f_hi = f_next;
  }
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;

  // Secant step accepted only when it lands strictly inside the bracket and
  // shrinks it by at least half; otherwise bisect.
  double best = lo, f_best = f_lo;
  for (int it = 0; it < kMaxIterations; ++it) {
    const double width = hi - lo;
    double x = lo - f_lo * width / (f_hi - f_lo);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    double fx = residual(x);
    if (std::abs(fx) < std::abs(f_best)) {
      best = x;
      f_best = fx;
    }
    if (fx == 0.0) return x;
    if (fx < 0.0) {
      lo = x;
      f_lo = fx;
    } else {
      hi = x;
      f_hi = fx;
    }
    if (hi - lo > 0.5 * width) {
      const double mid = 0.5 * (lo + hi);
      const double fm = residual(mid);
      if (std::abs(fm) < std::abs(f_best)) {
        best = mid;
        f_best = fm;
      }
      if (fm == 0.0) return mid;
      if (fm < 0.0) {
        lo = mid;
        f_lo = fm;
      } else {
        hi = mid;
        f_hi = fm;
      }
    }
    if (hi - lo <= kRelWidth * lo) break;
  }
  return best;
}

std::vector<BoundNode> bound_curve(std::span<const double> eta_grid, const LambData& data, const PhysConstants& c) {
  for (std::size_t i = 1; i < eta_grid.size(); ++i)
    if (!(eta_grid[i] > eta_grid[i - 1])) throw OutOfDomain("eta grid must be strictly increasing");
  if (eta_grid.empty()) return {};

  const double discrepancy = lamb_discrepancy(data);
  std::vector<BoundNode> out;
  out.reserve(eta_grid.size());
  for (double eta : eta_grid) {
    BoundNode node{eta, std::nullopt, {}};
    try {
      const double xi = solve_xi(eta, discrepancy, c);
      node.point = BoundPoint{eta, xi, xi * c.bohr_radius_m};
    } catch (const Error& e) {
      node.error = e.what();
    }
    out.push_back(std::move(node));
  }
  return out;
}

}  // namespace deform::bounds
