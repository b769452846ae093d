#include "deform/deformation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "deform/errors.hpp"

namespace deform {

DeformationParams DeformationParams::from_beta(double beta, double beta_prime) {
  if (!(beta >= 0.0) || !(beta_prime >= 0.0) || !std::isfinite(beta) || !std::isfinite(beta_prime))
    throw NegativeParameter("deformation parameters must be finite and non-negative (beta=" +
                            std::to_string(beta) + ", beta'=" + std::to_string(beta_prime) + ")");
  return {beta, beta_prime};
}

DeformationParams DeformationParams::from_xi_eta(double xi, double eta) {
  if (!(xi >= 0.0) || !std::isfinite(xi)) throw OutOfDomain("xi must be finite and non-negative");
  if (!(eta >= 0.0 && eta <= 1.0)) throw OutOfDomain("eta must lie in [0, 1]");
  const double xi2 = xi * xi;
  const double beta = eta * xi2;
  // eta = 1/3 has no exact binary representation; pin beta' = 2 beta there so the
  // boundary of the s-level domain is reached exactly instead of missed by one ulp.
  if (std::abs(3.0 * eta - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) return {beta, 2.0 * beta};
  return {beta, (1.0 - eta) * xi2};
}

double DeformationParams::min_length() const noexcept { return std::sqrt(beta_ + beta_prime_); }

std::optional<double> DeformationParams::eta() const noexcept {
  const double total = beta_ + beta_prime_;
  if (total <= 0.0) return std::nullopt;
  return beta_ / total;
}

bool slevel_domain_check(const DeformationParams& p) noexcept { return 2.0 * p.beta() >= p.beta_prime(); }

double b_shift(const DeformationParams& p, int dimension) {
  if (dimension < 2) throw OutOfDomain("space dimension must be at least 2");
  if (!slevel_domain_check(p)) throw OutOfDomain("2 beta < beta' outside modified-theory domain");
  return std::sqrt(p.alpha() * (dimension - 1));
}

}  // namespace deform
