#include <cmath>
#include <vector>

#include "deform/errors.hpp"
#include "deform/quadrature.hpp"
#include "deform/specfun.hpp"
#include "deform/spectrum.hpp"
#include "doctest.h"

using namespace deform;
using namespace deform::spectrum;

namespace {

constexpr double kGamma = specfun::euler_gamma();

// <n s| 1/sqrt(r^2+b^2) |n s> by direct integration of the textbook density.
double smeared_by_quadrature(const QuantumLevel& level, double b) {
  return quad::half_line(
             [&](double r) {
               const double d = hydrogen::radial_density(level, r);
               return d == 0.0 ? 0.0 : d / std::sqrt(r * r + b * b);
             },
             quad::HalfLineMap::Rational, 1.0, {1e-13, 0.0, 400})
      .value;
}

// <V> of the unregularised first-order Hamiltonian from the closed-form expectation set.
double ordinal_from_expectations(const QuantumLevel& level, const DeformationParams& p) {
  const auto ex = hydrogen::expectations(level);
  return p.beta_prime() * ex.p4 / 2.0 + 0.25 * p.log_weight() * (ex.mixed + (level.D - 1) * ex.inv_r3.value());
}

}  // namespace

TEST_CASE("smeared Coulomb, 1s") {
  CHECK(smeared_coulomb_1s(0.0) == 1.0);
  for (double b : {1e-3, 0.1, 0.5, 1.0, 3.0, 9.0})
    CHECK(smeared_coulomb_1s(b) == doctest::Approx(smeared_by_quadrature({1, 0, 3}, b)).epsilon(1e-10));
  // The misprinted prefactor is off by about a factor of four at small b.
  CHECK(smeared_coulomb_1s(1e-4, kSmearedPrefactorPrinted) == doctest::Approx(4.0).epsilon(1e-6));
  CHECK_THROWS_AS(smeared_coulomb_1s(-1.0), OutOfDomain);
}

TEST_CASE("smeared Coulomb, 1s, leading small-b behaviour") {
  const double b = 1e-3;
  const double shift = smeared_coulomb_1s(b) - 1.0;
  const double expansion = 2.0 * b * b * (std::log(b) + kGamma + 0.5);
  // The next term is O(b^3), so the relative mismatch is of order b.
  CHECK(std::abs(shift / expansion - 1.0) < 10.0 * b);
}

TEST_CASE("smeared Coulomb, 2s") {
  CHECK(smeared_coulomb_2s(0.0) == 0.25);
  for (double b : {1e-3, 0.05, 0.5, 1.0, 2.5, 20.0})
    CHECK(smeared_coulomb_2s(b) == doctest::Approx(smeared_by_quadrature({2, 0, 3}, b)).epsilon(1e-10));
  // Leading terms b^2/8 (ln(b^2/4) + 2 gamma + 5/2).
  const double b = 1e-3;
  const double expansion = b * b / 8.0 * (std::log(b * b / 4.0) + 2.0 * kGamma + 2.5);
  CHECK(std::abs((smeared_coulomb_2s(b) - 0.25) / expansion - 1.0) < 10.0 * b);
}

TEST_CASE("correction_ordinal") {
  const auto p = DeformationParams::from_beta(0.7, 0.4);
  const QuantumLevel p2{2, 1, 3};
  const double expected =
      (1.0 / 8.0) * ((2 * 0.7 - 0.4) * 2.0 / (4.0 * 1.0 * 2.0 * 1.5) + (2 * 0.7 + 0.4) / 1.5 - (0.7 + 0.4) / 2.0);
  const auto r = correction_ordinal(p2, p);
  CHECK(r.value.magnitude == doctest::Approx(expected).epsilon(1e-15));
  CHECK(r.method == Method::Ordinal);
  CHECK_FALSE(r.as_printed);

  CHECK_THROWS_AS(correction_ordinal({1, 0, 3}, p), DivergentLevel);
  CHECK_THROWS_AS(correction_ordinal({3, 0, 3}, p), DivergentLevel);
  CHECK_THROWS_AS(correction_ordinal({1, 0, 2}, p), DivergentLevel);
  CHECK(correction_ordinal({1, 0, 4}, p).as_printed);
  CHECK(std::isfinite(correction_ordinal({1, 0, 5}, p).value.magnitude));
}

TEST_CASE("correction_ordinal equals the expectation-set assembly") {
  const auto p = DeformationParams::from_beta(1e-6, 1e-6);
  for (auto [n, l] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 3}}) {
    const QuantumLevel lvl{n, l, 3};
    CHECK(correction_ordinal(lvl, p).value.magnitude ==
          doctest::Approx(ordinal_from_expectations(lvl, p)).epsilon(1e-10));
  }
}

TEST_CASE("correction_1s") {
  const double beta = 2.0e-7;
  CHECK(correction_1s(DeformationParams::from_beta(beta, 2 * beta)).value.magnitude ==
        doctest::Approx(5 * beta).epsilon(1e-15));
  CHECK(correction_1s(DeformationParams::from_beta(0, 0)).value.magnitude == 0.0);
  CHECK_THROWS_AS(correction_1s(DeformationParams::from_beta(1, 3)), OutOfDomain);

  const auto p = DeformationParams::from_beta(3e-5, 1e-5);
  const double w = 5e-5;
  CHECK(correction_1s(p).value.magnitude ==
        doctest::Approx(1e-4 - w * (std::log(w) + 2 * kGamma + 1)).epsilon(1e-14));
}

TEST_CASE("correction_2s") {
  const double beta = 2.0e-7;
  CHECK(correction_2s(DeformationParams::from_beta(0, 0)).value.magnitude == 0.0);
  CHECK(correction_2s(DeformationParams::from_beta(beta, 2 * beta)).value.magnitude ==
        doctest::Approx(13.0 * beta / 16.0).epsilon(1e-15));
  CHECK_THROWS_AS(correction_2s(DeformationParams::from_beta(1, 3)), OutOfDomain);
}

TEST_CASE("perturbation_expectation") {
  CHECK(perturbation_expectation({1, 0, 3}, DeformationParams::from_beta(0, 0)) == 0.0);
  const auto commuting = DeformationParams::from_beta(1e-6, 2e-6);
  CHECK(perturbation_expectation({1, 0, 3}, commuting) == doctest::Approx(correction_1s(commuting).value.magnitude).epsilon(1e-14));
  CHECK(perturbation_expectation({2, 0, 3}, commuting) == doctest::Approx(correction_2s(commuting).value.magnitude).epsilon(1e-14));
  CHECK_THROWS_AS(perturbation_expectation({2, 1, 3}, commuting), OutOfDomain);
  CHECK_THROWS_AS(perturbation_expectation({1, 0, 3}, DeformationParams::from_beta(1, 3)), OutOfDomain);
}

TEST_CASE("closed forms differ from the exact expectation by an O(b^3) remainder") {
  // beta' = 0 so b^2 = 2 beta. The closed forms drop the b^3 term of the smeared
  // shift; the scaled deviation must settle to a constant as b shrinks.
  for (int n : {1, 2}) {
    std::vector<double> scaled;
    for (double beta : {1e-4, 1e-5, 1e-6, 1e-7}) {
      const auto p = DeformationParams::from_beta(beta, 0.0);
      const double b = b_shift(p, 3);
      const double closed = n == 1 ? correction_1s(p).value.magnitude : correction_2s(p).value.magnitude;
      const double exact = perturbation_expectation({n, 0, 3}, p);
      scaled.push_back((exact - closed) / (b * b * b));
    }
    CAPTURE(n);
    CHECK(scaled[3] == doctest::Approx(scaled[2]).epsilon(0.02));
    CHECK(std::abs(scaled[2] - scaled[3]) < std::abs(scaled[0] - scaled[1]));
  }
  // At beta = 1e-6 the remainder is still below a part in a thousand.
  const auto p = DeformationParams::from_beta(1e-6, 0.0);
  CHECK(std::abs(perturbation_expectation({1, 0, 3}, p) / correction_1s(p).value.magnitude - 1.0) < 1e-3);
}

TEST_CASE("(xi, eta) forms") {
  const double xi = 3e-3;
  CHECK(correction_1s_xi_eta(xi, 1.0 / 3.0).magnitude == doctest::Approx(xi * xi * 5.0 / 3.0).epsilon(1e-15));
  CHECK(correction_2s_xi_eta(xi, 1.0 / 3.0).magnitude == doctest::Approx(xi * xi / 8.0 * 13.0 / 6.0).epsilon(1e-15));
  CHECK(correction_1s_xi_eta(0.0, 0.7).magnitude == 0.0);
  CHECK(correction_2s_xi_eta(0.0, 0.7).magnitude == 0.0);
  CHECK_THROWS_AS(correction_1s_xi_eta(1e-3, 0.3), OutOfDomain);
  CHECK_THROWS_AS(correction_2s_xi_eta(1e-3, 1.1), OutOfDomain);
  CHECK_THROWS_AS(correction_1s_xi_eta(-1e-3, 0.5), OutOfDomain);

  // xi = 0.05, eta = 1: 0.0025 (3 - 2 (ln 0.005 + 2 gamma + 1)) Hartree.
  const double v = 0.0025 * (3.0 - 2.0 * (std::log(0.005) + 2 * kGamma + 1.0));
  CHECK(correction_1s_xi_eta(0.05, 1.0).magnitude == doctest::Approx(v).epsilon(1e-14));
}

TEST_CASE("(xi, eta) and (beta, beta') forms agree on a grid") {
  for (int i = 0; i < 20; ++i) {
    const double xi = std::pow(10.0, -8.0 + i * (std::log10(0.3) + 8.0) / 19.0);
    for (int j = 0; j < 20; ++j) {
      const double eta = 1.0 / 3.0 + j * (2.0 / 3.0) / 19.0;
      const auto p = DeformationParams::from_xi_eta(xi, eta);
      CAPTURE(xi);
      CAPTURE(eta);
      CHECK(correction_1s_xi_eta(xi, eta).magnitude == doctest::Approx(correction_1s(p).value.magnitude).epsilon(1e-12));
      CHECK(correction_2s_xi_eta(xi, eta).magnitude == doctest::Approx(correction_2s(p).value.magnitude).epsilon(1e-12));
    }
  }
}

TEST_CASE("continuity at beta' = 2 beta") {
  const double beta = 1e-6;
  const double limit = 5 * beta;
  double previous = INFINITY;
  for (double eps : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10}) {
    const double v = correction_1s(DeformationParams::from_beta(beta, 2 * beta * (1 - eps))).value.magnitude;
    const double gap = std::abs(v - limit);
    CHECK(gap < previous);
    previous = gap;
  }
  CHECK(previous < 1e-12);
}

TEST_CASE("1s shift is positive and 1s, 2s grow with xi on the plotted range") {
  for (int j = 0; j <= 20; ++j) {
    const double eta = 1.0 / 3.0 + j * (2.0 / 3.0) / 20.0;
    double prev1 = 0.0, prev2 = 0.0;
    for (int i = 1; i <= 100; ++i) {
      const double xi = 0.1 * i / 100.0;
      const double v1 = correction_1s_xi_eta(xi, eta).magnitude;
      const double v2 = correction_2s_xi_eta(xi, eta).magnitude;
      CHECK(v1 > prev1);
      CHECK(v2 > prev2);
      prev1 = v1;
      prev2 = v2;
    }
  }
}
