#include "deform/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "deform/errors.hpp"
#include "deform/specfun.hpp"

namespace deform::spectrum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGamma = specfun::euler_gamma();

// w (ln(w s) + c), continuous at w = 0.
double log_term(double w, double s, double c) {
  if (w == 0.0) return 0.0;
  return w * (std::log(w * s) + c);
}

void require_slevel(const DeformationParams& p) {
  if (!slevel_domain_check(p)) throw OutOfDomain("2 beta < beta' outside modified-theory domain");
}

void require_eta(double xi, double eta) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) throw OutOfDomain("xi must be finite and non-negative");
  if (!(eta >= 1.0 / 3.0 && eta <= 1.0)) throw OutOfDomain("eta must lie in [1/3, 1] for s-level corrections");
}

}  // namespace

const char* to_string(Method m) noexcept { return m == Method::Ordinal ? "ordinal" : "modified"; }

CorrectionResult correction_ordinal(const QuantumLevel& level, const DeformationParams& p) {
  const double lb = level.l_bar();
  const double nb = level.n_bar();
  const double den = lb * (lb + 1.0) * (lb + 0.5);
  if (den == 0.0)
    throw DivergentLevel("ordinary perturbation theory diverges for n=" + std::to_string(level.n) +
                         ", l=" + std::to_string(level.l) + ", D=" + std::to_string(level.D));
  const double b = p.beta();
  const double bp = p.beta_prime();
  const double n3 = double(level.n) * level.n * level.n;
  const double bracket = (level.D - 1) * (2.0 * b - bp) / (4.0 * den) + (2.0 * b + bp) / (lb + 0.5) - (b + bp) / nb;
  return {hartree(bracket / n3), Method::Ordinal, level, p, level.D != 3};
}

double smeared_coulomb_1s(double b, double prefactor) {
  if (!(b >= 0.0)) throw OutOfDomain("smearing length must be non-negative");
  if (b == 0.0) return 1.0;
  const double x = 2.0 * b;
  const double k1 = specfun::struve_minus_y(1, x).value;
  const double k0 = specfun::struve_minus_y(0, x).value;
  return 4.0 * (prefactor * kPi * b * k1 - 0.5 * kPi * b * b * k0);
}

double smeared_coulomb_2s(double b) {
  if (!(b >= 0.0)) throw OutOfDomain("smearing length must be non-negative");
  if (b == 0.0) return 0.25;
  // M_k = int_0^inf r^k e^{-r} (r^2+b^2)^{-1/2} dr = (-1)^k (pi/2) b^k K0^{(k)}(b),
  // K0 = H_0 - Y_0, K1 = H_1 - Y_1, with K0' = 2/pi - K1 and K1' = K0 - K1/z.
  const double z = b;
  const double k0 = specfun::struve_minus_y(0, z).value;
  const double k1 = specfun::struve_minus_y(1, z).value;
  const double z2 = z * z;
  const double z3 = z2 * z;
  const double z4 = z2 * z2;
  const double m2 = 0.5 * kPi * (b * k1 - z2 * k0);
  const double m3 = 0.5 * kPi * (2.0 * z3 / kPi - z3 * k1 - z2 * k0 + 2.0 * z * k1);
  const double m4 = 0.5 * kPi * (z4 * k0 - 3.0 * z2 * k0 - 2.0 * z3 * k1 + 6.0 * z * k1 + 2.0 * z3 / kPi);
  // 2s density: r^2 (2 - r)^2 e^{-r} / 8
  return (4.0 * m2 - 4.0 * m3 + m4) / 8.0;
}

double perturbation_expectation(const QuantumLevel& level, const DeformationParams& p) {
  if (level.D != 3 || level.l != 0 || level.n > 2)
    throw OutOfDomain("perturbation_expectation supports the 1s and 2s levels in D = 3 only");
  require_slevel(p);
  const auto ex = hydrogen::expectations(level);
  const double b = b_shift(p, 3);
  const double smeared = level.n == 1 ? smeared_coulomb_1s(b) : smeared_coulomb_2s(b);
  return p.beta_prime() * ex.p4 / 2.0 - (smeared - ex.inv_r) + 0.25 * p.log_weight() * ex.mixed;
}

CorrectionResult correction_1s(const DeformationParams& p) {
  require_slevel(p);
  const double b = p.beta();
  const double bp = p.beta_prime();
  const double value = 3.0 * b + bp - log_term(p.log_weight(), 1.0, 2.0 * kGamma + 1.0);
  return {hartree(value), Method::Modified, QuantumLevel{1, 0, 3}, p, false};
}

CorrectionResult correction_2s(const DeformationParams& p) {
  require_slevel(p);
  const double b = p.beta();
  const double bp = p.beta_prime();
  const double value = ((7.0 * b + 3.0 * bp) / 2.0 - log_term(p.log_weight(), 0.25, 2.0 * kGamma + 2.5)) / 8.0;
  return {hartree(value), Method::Modified, QuantumLevel{2, 0, 3}, p, false};
}

EnergyValue correction_1s_xi_eta(double xi, double eta) {
  require_eta(xi, eta);
  const double xi2 = xi * xi;
  if (xi2 == 0.0) return hartree(0.0);
  const double w = 3.0 * eta - 1.0;
  return hartree(xi2 * (2.0 * eta + 1.0) - xi2 * log_term(w, xi2, 2.0 * kGamma + 1.0));
}

EnergyValue correction_2s_xi_eta(double xi, double eta) {
  require_eta(xi, eta);
  const double xi2 = xi * xi;
  if (xi2 == 0.0) return hartree(0.0);
  const double w = 3.0 * eta - 1.0;
  return hartree(xi2 / 8.0 * ((4.0 * eta + 3.0) / 2.0 - log_term(w, xi2 / 4.0, 2.0 * kGamma + 2.5)));
}

}  // namespace deform::spectrum
