#pragma once

#include "deform/deformation.hpp"
#include "deform/hydrogen.hpp"
#include "deform/units.hpp"

namespace deform::spectrum {

enum class Method { Ordinal, Modified };

const char* to_string(Method m) noexcept;

struct CorrectionResult {
  EnergyValue value;  // Hartree
  Method method = Method::Modified;
  QuantumLevel level;
  DeformationParams params;
  // Set when the ordinal formula is used for D != 3, where its 1/n^3 prefactor
  // is taken literally rather than as 1/n_bar^3.
  bool as_printed = false;
};

/// First-order correction from ordinary perturbation theory in D dimensions:
///
///   dE = 1/n^3 [ (D-1)(2b - b') / (4 lb (lb+1)(lb+1/2)) + (2b + b')/(lb + 1/2) - (b + b')/nb ]
///
/// Throws DivergentLevel when lb (lb+1)(lb+1/2) = 0, i.e. s-states for D = 3 and D = 2.
CorrectionResult correction_ordinal(const QuantumLevel& level, const DeformationParams& p);

/// Coefficient of the (H_1 - Y_1) term in the closed form of <1s| (r^2+b^2)^{-1/2} |1s>.
/// kSmearedPrefactor is the correct value; kSmearedPrefactorPrinted is the misprinted
/// variant kept only so the verification suite can show that it fails.
inline constexpr double kSmearedPrefactor = 0.25;
inline constexpr double kSmearedPrefactorPrinted = 1.0;

/// <1s| 1/sqrt(r^2 + b^2) |1s> = 4 [ c pi b (H_1 - Y_1)(2b) - (pi b^2 / 2)(H_0 - Y_0)(2b) ], c = 1/4.
/// Tends to <1/r> = 1 as b -> 0.
double smeared_coulomb_1s(double b, double prefactor = kSmearedPrefactor);

/// Same expectation in the 2s state, from moments of int r^k e^{-r} (r^2+b^2)^{-1/2} dr.
double smeared_coulomb_2s(double b);

/// <psi| V |psi> with V the regularised perturbation, using the exact smeared term.
/// Only 1s and 2s in D = 3 are supported.
double perturbation_expectation(const QuantumLevel& level, const DeformationParams& p);

/// dE_1s = 3b + b' - (2b - b') (ln(2b - b') + 2 gamma + 1)
CorrectionResult correction_1s(const DeformationParams& p);

/// dE_2s = 1/8 [ (7b + 3b')/2 - (2b - b') (ln((2b - b')/4) + 2 gamma + 5/2) ]
CorrectionResult correction_2s(const DeformationParams& p);

/// dE_1s = xi^2 [ 2 eta + 1 - (3 eta - 1)(ln(xi^2 (3 eta - 1)) + 2 gamma + 1) ] Hartree
EnergyValue correction_1s_xi_eta(double xi, double eta);

/// dE_2s = xi^2 / 8 [ (4 eta + 3)/2 - (3 eta - 1)(ln(xi^2 (3 eta - 1)/4) + 2 gamma + 5/2) ] Hartree
EnergyValue correction_2s_xi_eta(double xi, double eta);

}  // namespace deform::spectrum
