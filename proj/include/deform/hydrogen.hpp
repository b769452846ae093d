#pragma once

#include <optional>

#include "deform/units.hpp"

namespace deform {

/// Bound state (n, l) of the D-dimensional Coulomb problem.
struct QuantumLevel {
  int n = 1;
  int l = 0;
  int D = 3;

  /// Validates n >= 1, 0 <= l < n, D >= 2; throws OutOfDomain otherwise.
  static QuantumLevel make(int n, int l, int D = 3);

  /// n + (D - 3)/2
  double n_bar() const noexcept { return n + 0.5 * (D - 3); }
  /// l + (D - 3)/2
  double l_bar() const noexcept { return l + 0.5 * (D - 3); }

  bool is_3d_s(int principal) const noexcept { return D == 3 && l == 0 && n == principal; }

  friend bool operator==(const QuantumLevel&, const QuantumLevel&) = default;
};

namespace hydrogen {

/// Closed-form expectation values in a hydrogen eigenstate, atomic units.
struct ExpectationSet {
  double energy = 0.0;  // E_n
  double inv_r = 0.0;   // <1/r>
  double inv_r2 = 0.0;  // <1/r^2>
  std::optional<double> inv_r3;  // <1/r^3>; empty when it diverges
  double p2 = 0.0;      // <p^2>
  double p4 = 0.0;      // <p^4>
  double mixed = 0.0;   // <(1/r) p^2 + p^2 (1/r)>

  bool inv_r3_divergent() const noexcept { return !inv_r3.has_value(); }
};

/// E_n = -1 / (2 n_bar^2) Hartree.
EnergyValue energy(const QuantumLevel& level);

/// |R_nl(r)|^2 r^2 for the three-dimensional atom. Throws Unsupported for D != 3.
double radial_density(const QuantumLevel& level, double r);

/// Closed forms with n -> n_bar, l -> l_bar. The momentum moments follow from
/// p^2 psi = 2 (E_n + 1/r) psi:
///   <p^4>   = 4 (E^2 + 2 E <1/r> + <1/r^2>)
///   <mixed> = 4 (E <1/r> + <1/r^2>)
ExpectationSet expectations(const QuantumLevel& level);

}  // namespace hydrogen
}  // namespace deform
