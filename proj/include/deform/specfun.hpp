#pragma once

namespace deform::specfun {

struct SpecFunResult {
  double value = 0.0;
  double est_abs_error = 0.0;
};

/// Euler-Mascheroni constant.
constexpr double euler_gamma() noexcept { return 0.5772156649015329; }

/// Argument above which the ascending series give way to the integral / asymptotic route.
inline constexpr double kSeriesSwitch = 16.0;

/// Struve function H_nu(x), nu in {0, 1}, x >= 0.
SpecFunResult struve_h(int nu, double x);

/// Bessel function of the second kind Y_nu(x), nu in {0, 1}, x > 0.
SpecFunResult bessel_y(int nu, double x);

/// H_nu(x) - Y_nu(x), nu in {0, 1}, x > 0.
///
/// For x > kSeriesSwitch this is evaluated directly from
///   H_0 - Y_0 = (2/pi)  int_0^inf exp(-x sinh t) dt
///   H_1 - Y_1 = (2x/pi) int_0^inf exp(-x sinh t) cosh^2 t dt
/// so no large cancelling terms are ever formed.
SpecFunResult struve_minus_y(int nu, double x);

}  // namespace deform::specfun
