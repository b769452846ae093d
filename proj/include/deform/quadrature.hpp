#pragma once

#include <functional>

namespace deform::quad {

struct Result {
  double value = 0.0;
  double abs_error = 0.0;  // estimated
  int subdivisions = 0;    // number of panels in the final partition
  int evaluations = 0;
};

struct Tolerance {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  int max_subdivisions = 200;
};

/// One 15-point Gauss-Kronrod panel on [a, b] with the QUADPACK error heuristic.
Result gauss_kronrod15(const std::function<double(double)>& f, double a, double b);

/// Globally adaptive bisection of [a, b] until the summed error estimate meets
/// max(abs_tol, rel_tol |I|). Throws NonConvergent when the panel budget is spent.
Result adaptive(const std::function<double(double)>& f, double a, double b, const Tolerance& tol = {});

/// Change of variables used to fold [0, inf) onto (0, 1).
enum class HalfLineMap {
  Rational,     // r = s u / (1 - u)
  Logarithmic,  // r = -s ln(1 - u), matched to exponentially damped integrands
};

/// Integral of f over [0, inf). `scale` sets the length s of the map; for the
/// logarithmic map pick s above the decay length of f or the mapped integrand
/// is no longer damped at u = 1.
Result half_line(const std::function<double(double)>& f, HalfLineMap map, double scale, const Tolerance& tol = {});

}  // namespace deform::quad
