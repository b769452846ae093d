#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "deform/deformation.hpp"
#include "deform/hydrogen.hpp"
#include "deform/spectrum.hpp"
#include "json.hpp"

// Independent numerical ground truth for the closed forms: every expectation
// value here is an explicit radial integral over the textbook wavefunction.
namespace deform::oracle {

struct QuadratureSpec {
  enum class Transform {
    None,             // u = r / (1 + r) folding of [0, inf)
    ExpSubstitution,  // r = -n ln(1 - u), matched to the e^{-2r/n} tail
  };

  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  int max_subdivisions = 200;
  Transform transform = Transform::None;

  /// Throws OutOfDomain unless rel_tol >= 1e-14 and max_subdivisions >= 10.
  void validate() const;
};

/// int_0^inf radial_density(level, r) f(r) dr. Throws NonConvergent.
double quad_expectation(const QuantumLevel& level, const std::function<double(double)>& f,
                        const QuadratureSpec& spec = {});

/// <1/sqrt(r^2+b^2) - 1/r> with the difference formed without cancellation.
double quad_smeared_shift(const QuantumLevel& level, double b, const QuadratureSpec& spec = {});

struct VerificationCase {
  std::string name;
  double closed_form = 0.0;
  double oracle = 0.0;
  double rel_err = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<VerificationCase> cases;

  bool overall_pass() const noexcept;
  void add(std::string name, double closed_form, double oracle, double threshold);
  void append(const VerificationReport& other);
};

void to_json(nlohmann::json& j, const VerificationCase& c);
void to_json(nlohmann::json& j, const VerificationReport& r);

double relative_error(double value, double reference) noexcept;

/// smeared_coulomb_1s against quadrature on each b; pass iff rel_err <= threshold.
VerificationReport verify_smeared_closed_form(std::span<const double> b_grid, const QuadratureSpec& spec = {},
                                              double prefactor = spectrum::kSmearedPrefactor,
                                              double threshold = 1e-8);

/// Checks every finite entry of hydrogen::expectations. <p^2>, <p^4> and the mixed
/// term go through the Schroedinger identity so only <r^-k> integrals are needed.
VerificationReport verify_expectation_set(const QuantumLevel& level, const QuadratureSpec& spec = {},
                                          double threshold = 1e-10);

/// <V> of the regularised perturbation for 1s/2s with every bracket integrated.
double assemble_correction(const QuantumLevel& level, const DeformationParams& p, const QuadratureSpec& spec = {});

/// <V> of the unregularised first-order Hamiltonian (with the 1/r^3 term), D = 3, l >= 1.
double assemble_ordinal(const QuantumLevel& level, const DeformationParams& p, const QuadratureSpec& spec = {});

struct SuiteOptions {
  double rel_tol = 1e-12;
  double smeared_prefactor = spectrum::kSmearedPrefactor;
};

/// Full verification suite: smeared closed form, expectation sets, s-level
/// closed forms against assembly, and the ordinal formula against assembly.
VerificationReport run_suite(const SuiteOptions& options = {});

}  // namespace deform::oracle
