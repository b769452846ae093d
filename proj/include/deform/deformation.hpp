#pragma once

#include <optional>

namespace deform {

/// Deformation parameters (beta, beta') of the minimal-length algebra, in atomic units.
///
/// The pair (beta, beta') is the only stored state. The dimensionless pair
/// xi = dx_min / a and eta = beta / (beta + beta') is always derived from it.
class DeformationParams {
 public:
  DeformationParams() = default;

  /// Throws NegativeParameter if either argument is negative or not finite.
  static DeformationParams from_beta(double beta, double beta_prime);

  /// beta = eta xi^2, beta' = (1 - eta) xi^2. Throws OutOfDomain for xi < 0 or eta outside [0, 1].
  static DeformationParams from_xi_eta(double xi, double eta);

  double beta() const noexcept { return beta_; }
  double beta_prime() const noexcept { return beta_prime_; }

  /// (2 beta - beta') / 2
  double alpha() const noexcept { return 0.5 * (2.0 * beta_ - beta_prime_); }

  /// 2 beta - beta', the coefficient multiplying every logarithm in the s-level corrections.
  double log_weight() const noexcept { return 2.0 * beta_ - beta_prime_; }

  /// hbar sqrt(beta + beta'), in Bohr radii.
  double min_length() const noexcept;

  double xi() const noexcept { return min_length(); }

  /// Undefined in the undeformed limit beta + beta' = 0.
  std::optional<double> eta() const noexcept;

  bool undeformed() const noexcept { return beta_ == 0.0 && beta_prime_ == 0.0; }

  friend bool operator==(const DeformationParams&, const DeformationParams&) = default;

 private:
  DeformationParams(double beta, double beta_prime) : beta_(beta), beta_prime_(beta_prime) {}

  double beta_ = 0.0;
  double beta_prime_ = 0.0;
};

/// True iff 2 beta >= beta'. The equality case is the continuous beta' = 2 beta limit.
bool slevel_domain_check(const DeformationParams& p) noexcept;

/// Shift b = hbar sqrt(alpha (D - 1)) that removes the 1/r^3 term. Throws OutOfDomain if 2 beta < beta' or D < 2.
double b_shift(const DeformationParams& p, int dimension);

}  // namespace deform
