#include "deform/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "deform/errors.hpp"
#include "deform/quadrature.hpp"

namespace deform::specfun {

namespace {

using Real = long double;

constexpr Real kPi = std::numbers::pi_v<long double>;
constexpr Real kGamma = 0.577215664901532860606512090082402431L;
constexpr Real kEpsL = std::numeric_limits<long double>::epsilon();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr Real kTruncation = 1e-18L;
constexpr int kMaxTerms = 500;

struct Series {
  Real sum = 0;
  Real last = 0;      // magnitude of the first neglected-size term
  Real largest = 0;   // largest term magnitude, drives the rounding estimate
  int terms = 0;

  Real error() const { return last + 4 * kEpsL * largest * (terms + 1); }
};

void check_order(int nu) {
  if (nu != 0 && nu != 1) throw OutOfDomain("only orders 0 and 1 are implemented (got " + std::to_string(nu) + ")");
}

// sum_k (-1)^k (x/2)^{2k+nu+1} / (Gamma(k+3/2) Gamma(k+nu+3/2))
Series struve_series(int nu, Real x) {
  Series s;
  const Real q = x * x / 4;
  Real term = nu == 0 ? 2 * x / kPi : 2 * x * x / (3 * kPi);
  for (int k = 0; k < kMaxTerms; ++k) {
    s.sum += term;
    s.largest = std::max(s.largest, std::abs(term));
    s.terms = k + 1;
    const Real kk = k + 1.5L;
    term *= -q / (kk * (kk + nu));
    if (std::abs(term) < kTruncation * std::abs(s.sum)) break;
  }
  s.last = std::abs(term);
  return s;
}

// J_nu(x) = sum_k (-1)^k (x/2)^{2k+nu} / (k! (k+nu)!)
Series bessel_j_series(int nu, Real x) {
  Series s;
  const Real q = x * x / 4;
  Real term = nu == 0 ? 1 : x / 2;
  for (int k = 0; k < kMaxTerms; ++k) {
    s.sum += term;
    s.largest = std::max(s.largest, std::abs(term));
    s.terms = k + 1;
    term *= -q / (Real(k + 1) * Real(k + 1 + nu));
    if (std::abs(term) < kTruncation * std::abs(s.sum)) break;
  }
  s.last = std::abs(term);
  return s;
}

// Logarithmic ascending series for Y_0 and Y_1 in terms of harmonic numbers.
Series bessel_y_series(int nu, Real x) {
  const Real q = x * x / 4;
  const Real log_part = std::log(x / 2) + kGamma;
  const Series j = bessel_j_series(nu, x);

  Series tail;
  if (nu == 0) {
    // (2/pi) sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2
    Real power = 1;  // (-1)^{k+1} q^k / (k!)^2 without the harmonic factor
    Real harmonic = 0;
    for (int k = 1; k < kMaxTerms; ++k) {
      power *= -q / (Real(k) * Real(k));
      harmonic += Real(1) / k;
      const Real term = -power * harmonic;
      tail.sum += term;
      tail.largest = std::max(tail.largest, std::abs(term));
      tail.terms = k;
      tail.last = std::abs(term);
      if (std::abs(term) < kTruncation * std::abs(tail.sum)) break;
    }
    Series y;
    y.sum = 2 / kPi * (log_part * j.sum + tail.sum);
    y.largest = 2 / kPi * std::max(std::abs(log_part) * j.largest, tail.largest);
    y.last = 2 / kPi * (std::abs(log_part) * j.last + tail.last);
    y.terms = std::max(j.terms, tail.terms);
    return y;
  }

  // -(1/pi) sum_{k>=0} (-1)^k (H_k + H_{k+1}) (x/2)^{2k+1} / (k! (k+1)!)
  Real power = x / 2;
  Real h_k = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const Real h_next = h_k + Real(1) / (k + 1);
    const Real term = power * (h_k + h_next);
    tail.sum += term;
    tail.largest = std::max(tail.largest, std::abs(term));
    tail.terms = k + 1;
    tail.last = std::abs(term);
    if (k > 0 && std::abs(term) < kTruncation * std::abs(tail.sum)) break;
    power *= -q / (Real(k + 1) * Real(k + 2));
    h_k = h_next;
  }
  Series y;
  const Real pole = 2 / (kPi * x);
  y.sum = 2 / kPi * log_part * j.sum - pole - tail.sum / kPi;
  y.largest = std::max({2 / kPi * std::abs(log_part) * j.largest, pole, tail.largest / kPi});
  y.last = 2 / kPi * std::abs(log_part) * j.last + tail.last / kPi;
  y.terms = std::max(j.terms, tail.terms);
  return y;
}

// Hankel asymptotic expansion, truncated at its smallest term.
SpecFunResult bessel_y_asymptotic(int nu, double xd) {
  const Real x = xd;
  const Real mu = 4.0L * nu * nu;
  Real p = 0, q = 0;
  Real a = 1;  // a_k(nu) / x^k
  Real last = 1;
  for (int k = 0; k < kMaxTerms; ++k) {
    const Real signed_term = ((k / 2) % 2 == 0) ? a : -a;
    if (k % 2 == 0)
      p += signed_term;
    else
      q += signed_term;
    const Real odd = 2 * k + 1;
    const Real next = a * (mu - odd * odd) / (Real(k + 1) * 8 * x);
    last = std::abs(next);
    if (last < 1e-20L || std::abs(next) > std::abs(a)) break;
    a = next;
  }
  const Real chi = x - (2 * nu + 1) * kPi / 4;
  const Real amp = std::sqrt(2 / (kPi * x));
  SpecFunResult out;
  out.value = static_cast<double>(amp * (p * std::sin(chi) + q * std::cos(chi)));
  // Truncation plus the phase error from reducing a large argument in double.
  out.est_abs_error = static_cast<double>(amp * (last + 4 * kEps * (1 + x))) + kEps * std::abs(out.value);
  return out;
}

SpecFunResult struve_minus_y_integral(int nu, double x) {
  // exp(-x sinh t) underflows once x sinh t exceeds ~745.
  const double upper = std::asinh(750.0 / x);
  quad::Tolerance tol;
  tol.rel_tol = 1e-13;
  tol.abs_tol = 0.0;
  tol.max_subdivisions = 400;
  quad::Result r;
  if (nu == 0) {
    r = quad::adaptive([x](double t) { return std::exp(-x * std::sinh(t)); }, 0.0, upper, tol);
  } else {
    r = quad::adaptive(
        [x](double t) {
          const double c = std::cosh(t);
          return std::exp(-x * std::sinh(t)) * c * c;
        },
        0.0, upper, tol);
  }
  const double factor = nu == 0 ? 2.0 / std::numbers::pi : 2.0 * x / std::numbers::pi;
  return {factor * r.value, factor * r.abs_error};
}

}  // namespace

SpecFunResult struve_h(int nu, double x) {
  check_order(nu);
  if (!(x >= 0.0)) throw OutOfDomain("struve_h requires x >= 0");
  if (x == 0.0) return {0.0, 0.0};
  if (x <= kSeriesSwitch) {
    const Series s = struve_series(nu, x);
    const double v = static_cast<double>(s.sum);
    return {v, static_cast<double>(s.error()) + kEps * std::abs(v)};
  }
  const SpecFunResult diff = struve_minus_y_integral(nu, x);
  const SpecFunResult y = bessel_y_asymptotic(nu, x);
  return {diff.value + y.value, diff.est_abs_error + y.est_abs_error};
}

SpecFunResult bessel_y(int nu, double x) {
  check_order(nu);
  if (!(x > 0.0)) throw OutOfDomain("bessel_y requires x > 0");
  if (x <= kSeriesSwitch) {
    const Series s = bessel_y_series(nu, x);
    const double v = static_cast<double>(s.sum);
    return {v, static_cast<double>(s.error()) + kEps * std::abs(v)};
  }
  return bessel_y_asymptotic(nu, x);
}

SpecFunResult struve_minus_y(int nu, double x) {
  check_order(nu);
  if (!(x > 0.0)) throw OutOfDomain("struve_minus_y requires x > 0");
  if (x > kSeriesSwitch) return struve_minus_y_integral(nu, x);
  const Series h = struve_series(nu, x);
  const Series y = bessel_y_series(nu, x);
  const double v = static_cast<double>(h.sum - y.sum);
  return {v, static_cast<double>(h.error() + y.error()) + kEps * std::abs(v)};
}

}  // namespace deform::specfun
