#include "deform/hydrogen.hpp"

#include <cmath>
#include <string>

#include "deform/errors.hpp"

namespace deform {

QuantumLevel QuantumLevel::make(int n, int l, int D) {
  if (n < 1) throw OutOfDomain("principal quantum number must be >= 1");
  if (l < 0 || l > n - 1) throw OutOfDomain("orbital quantum number must satisfy 0 <= l <= n-1");
  if (D < 2) throw OutOfDomain("space dimension must be >= 2");
  return {n, l, D};
}

namespace hydrogen {

EnergyValue energy(const QuantumLevel& level) {
  const double nb = level.n_bar();
  return hartree(-0.5 / (nb * nb));
}

double radial_density(const QuantumLevel& level, double r) {
  if (level.D != 3)
    throw Unsupported("radial wavefunctions are implemented for D = 3 only (got D = " + std::to_string(level.D) + ")");
  if (!(r >= 0.0)) throw OutOfDomain("radius must be non-negative");
  if (r == 0.0) return 0.0;

  const int n = level.n;
  const int l = level.l;
  const double rho = 2.0 * r / n;
  // Normalisation (2/n)^3 (n-l-1)! / (2n (n+l)!), handled in logs with the power and exponential.
  const double log_norm = 3.0 * std::log(2.0 / n) + std::lgamma(n - l) - std::log(2.0 * n) - std::lgamma(n + l + 1.0);
  const double log_rest = 2.0 * l * std::log(rho) + 2.0 * std::log(r) - rho;
  const double lag = std::assoc_laguerre(static_cast<unsigned>(n - l - 1), static_cast<unsigned>(2 * l + 1), rho);
  return std::exp(log_norm + log_rest) * lag * lag;
}

ExpectationSet expectations(const QuantumLevel& level) {
  const double nb = level.n_bar();
  const double lb = level.l_bar();
  ExpectationSet s;
  s.energy = -0.5 / (nb * nb);
  s.inv_r = 1.0 / (nb * nb);
  s.inv_r2 = 1.0 / (nb * nb * nb * (lb + 0.5));
  const double r3_den = lb * (lb + 0.5) * (lb + 1.0);
  if (r3_den != 0.0) s.inv_r3 = 1.0 / (nb * nb * nb * r3_den);
  s.p2 = 2.0 * (s.energy + s.inv_r);
  s.p4 = 4.0 * (s.energy * s.energy + 2.0 * s.energy * s.inv_r + s.inv_r2);
  s.mixed = 4.0 * (s.energy * s.inv_r + s.inv_r2);
  return s;
}

}  // namespace hydrogen
}  // namespace deform
