#include "deform/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "deform/errors.hpp"
#include "deform/quadrature.hpp"

namespace deform::oracle {

namespace {

quad::Tolerance tolerance_of(const QuadratureSpec& spec) {
  return {spec.rel_tol, spec.abs_tol, spec.max_subdivisions};
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string level_name(const QuantumLevel& level) {
  static constexpr std::array<char, 6> letters = {'s', 'p', 'd', 'f', 'g', 'h'};
  std::string out = std::to_string(level.n);
  if (level.l < static_cast<int>(letters.size()))
    out += letters[level.l];
  else
    out += "l" + std::to_string(level.l);
  return out;
}

struct RadialMoments {
  double inv_r, inv_r2;
};

RadialMoments radial_moments(const QuantumLevel& level, const QuadratureSpec& spec) {
  return {quad_expectation(level, [](double r) { return 1.0 / r; }, spec),
          quad_expectation(level, [](double r) { return 1.0 / (r * r); }, spec)};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol >= 1e-14)) throw OutOfDomain("quadrature rel_tol must be >= 1e-14");
  if (max_subdivisions < 10) throw OutOfDomain("quadrature max_subdivisions must be >= 10");
  if (!(abs_tol >= 0.0)) throw OutOfDomain("quadrature abs_tol must be non-negative");
}

double quad_expectation(const QuantumLevel& level, const std::function<double(double)>& f,
                        const QuadratureSpec& spec) {
  spec.validate();
  if (level.D != 3) throw Unsupported("quadrature oracle works in D = 3 only");
  auto integrand = [&](double r) {
    const double rho = hydrogen::radial_density(level, r);
    return rho == 0.0 ? 0.0 : rho * f(r);
  };
  const auto map = spec.transform == QuadratureSpec::Transform::None ? quad::HalfLineMap::Rational
                                                                      : quad::HalfLineMap::Logarithmic;
  const double scale = spec.transform == QuadratureSpec::Transform::None ? 1.0 : static_cast<double>(level.n);
  return quad::half_line(integrand, map, scale, tolerance_of(spec)).value;
}

double quad_smeared_shift(const QuantumLevel& level, double b, const QuadratureSpec& spec) {
  if (!(b >= 0.0)) throw OutOfDomain("smearing length must be non-negative");
  if (b == 0.0) return 0.0;
  const double b2 = b * b;
  return quad_expectation(
      level,
      [b2](double r) {
        const double s = std::sqrt(r * r + b2);
        return -b2 / (r * s * (r + s));
      },
      spec);
}

double relative_error(double value, double reference) noexcept {
  if (reference == 0.0) return std::abs(value);
  return std::abs(value - reference) / std::abs(reference);
}

bool VerificationReport::overall_pass() const noexcept {
  return std::all_of(cases.begin(), cases.end(), [](const VerificationCase& c) { return c.pass; });
}

void VerificationReport::add(std::string name, double closed_form, double oracle_value, double threshold) {
  const double err = relative_error(closed_form, oracle_value);
  cases.push_back({std::move(name), closed_form, oracle_value, err, std::isfinite(err) && err <= threshold});
}

void VerificationReport::append(const VerificationReport& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

void to_json(nlohmann::json& j, const VerificationCase& c) {
  j = nlohmann::json{{"name", c.name}, {"closed_form", c.closed_form}, {"oracle", c.oracle},
                     {"rel_err", c.rel_err}, {"pass", c.pass}};
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"cases", r.cases}, {"overall_pass", r.overall_pass()}};
}

VerificationReport verify_smeared_closed_form(std::span<const double> b_grid, const QuadratureSpec& spec,
                                              double prefactor, double threshold) {
  VerificationReport report;
  const QuantumLevel ground{1, 0, 3};
  for (double b : b_grid) {
    if (!(b > 0.0)) throw OutOfDomain("smearing grid values must be positive");
    const double closed = spectrum::smeared_coulomb_1s(b, prefactor);
    const double reference = 1.0 + quad_smeared_shift(ground, b, spec);
    report.add("smeared_1s b=" + fmt(b), closed, reference, threshold);
  }
  return report;
}

VerificationReport verify_expectation_set(const QuantumLevel& level, const QuadratureSpec& spec, double threshold) {
  const auto closed = hydrogen::expectations(level);
  const double e = hydrogen::energy(level).magnitude;
  const auto m = radial_moments(level, spec);
  const std::string tag = level_name(level) + " ";

  VerificationReport report;
  report.add(tag + "norm", 1.0, quad_expectation(level, [](double) { return 1.0; }, spec), threshold);
  report.add(tag + "inv_r", closed.inv_r, m.inv_r, threshold);
  report.add(tag + "inv_r2", closed.inv_r2, m.inv_r2, threshold);
  if (closed.inv_r3)
    report.add(tag + "inv_r3", *closed.inv_r3,
               quad_expectation(level, [](double r) { return 1.0 / (r * r * r); }, spec), threshold);
  report.add(tag + "p2", closed.p2, 2.0 * (e + m.inv_r), threshold);
  report.add(tag + "p4", closed.p4, 4.0 * (e * e + 2.0 * e * m.inv_r + m.inv_r2), threshold);
  report.add(tag + "mixed", closed.mixed, 4.0 * (e * m.inv_r + m.inv_r2), threshold);
  return report;
}

double assemble_correction(const QuantumLevel& level, const DeformationParams& p, const QuadratureSpec& spec) {
  if (level.D != 3 || level.l != 0 || level.n > 2)
    throw OutOfDomain("assemble_correction supports the 1s and 2s levels in D = 3 only");
  if (!slevel_domain_check(p)) throw OutOfDomain("2 beta < beta' outside modified-theory domain");
  const double e = hydrogen::energy(level).magnitude;
  const auto m = radial_moments(level, spec);
  const double p4 = 4.0 * (e * e + 2.0 * e * m.inv_r + m.inv_r2);
  const double mixed = 4.0 * (e * m.inv_r + m.inv_r2);
  const double shift = quad_smeared_shift(level, b_shift(p, 3), spec);
  return p.beta_prime() * p4 / 2.0 - shift + 0.25 * p.log_weight() * mixed;
}

double assemble_ordinal(const QuantumLevel& level, const DeformationParams& p, const QuadratureSpec& spec) {
  if (level.D != 3) throw Unsupported("assemble_ordinal works in D = 3 only");
  if (level.l == 0) throw DivergentLevel("<1/r^3> diverges for s-states");
  const double e = hydrogen::energy(level).magnitude;
  const auto m = radial_moments(level, spec);
  const double inv_r3 = quad_expectation(level, [](double r) { return 1.0 / (r * r * r); }, spec);
  const double p4 = 4.0 * (e * e + 2.0 * e * m.inv_r + m.inv_r2);
  const double mixed = 4.0 * (e * m.inv_r + m.inv_r2);
  return p.beta_prime() * p4 / 2.0 + 0.25 * p.log_weight() * (mixed + (level.D - 1) * inv_r3);
}

VerificationReport run_suite(const SuiteOptions& options) {
  QuadratureSpec spec;
  spec.rel_tol = options.rel_tol;
  spec.validate();
  const double loose = 10.0 * options.rel_tol;

  VerificationReport report;
  constexpr std::array<double, 5> b_grid = {1e-4, 1e-2, 0.1, 0.5, 1.0};
  report.append(verify_smeared_closed_form(b_grid, spec, options.smeared_prefactor, std::max(1e-8, loose)));

  const QuantumLevel s1{1, 0, 3}, s2{2, 0, 3};
  report.append(verify_expectation_set(s1, spec, std::max(1e-10, loose)));
  report.append(verify_expectation_set(s2, spec, std::max(1e-10, loose)));

  // beta' = 2 beta: b = 0 and the closed forms are exact, so assembly must agree tightly.
  const auto commuting = DeformationParams::from_xi_eta(1e-3, 1.0 / 3.0);
  report.add("commuting 1s", spectrum::correction_1s(commuting).value.magnitude, assemble_correction(s1, commuting, spec),
             std::max(1e-10, loose));
  report.add("commuting 2s", spectrum::correction_2s(commuting).value.magnitude, assemble_correction(s2, commuting, spec),
             std::max(1e-10, loose));

  // The closed forms keep only the b^2 ln b and b^2 terms of the smeared shift, so the
  // deviation from assembly must shrink monotonically as xi -> 0.
  constexpr std::array<double, 3> xis = {1e-2, 1e-3, 1e-4};
  for (const auto& level : {s1, s2}) {
    double previous = 0.1;
    for (double xi : xis) {
      const auto p = DeformationParams::from_xi_eta(xi, 1.0);
      const double closed = level.n == 1 ? spectrum::correction_1s(p).value.magnitude
                                         : spectrum::correction_2s(p).value.magnitude;
      const double assembled = assemble_correction(level, p, spec);
      const double err = relative_error(closed, assembled);
      report.cases.push_back({"small-b " + level_name(level) + " xi=" + fmt(xi), closed, assembled, err,
                              std::isfinite(err) && err < previous});
      previous = err;
    }
  }

  const auto mix = DeformationParams::from_xi_eta(1e-3, 0.5);
  for (auto [n, l] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    const QuantumLevel level{n, l, 3};
    report.add("ordinal " + level_name(level), spectrum::correction_ordinal(level, mix).value.magnitude,
               assemble_ordinal(level, mix, spec), std::max(1e-10, loose));
  }
  return report;
}

}  // namespace deform::oracle
