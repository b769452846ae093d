#include "deform/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "deform/errors.hpp"

namespace deform::quad {

namespace {

// Abscissae and weights from QUADPACK qk15 (Fullerton, 80-digit arithmetic).
// xgk[1], xgk[3], xgk[5] are the 7-point Gauss nodes; xgk[7] is the centre.
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Result r;
  bool operator<(const Panel& other) const { return r.abs_error < other.r.abs_error; }
};

}  // namespace

Result gauss_kronrod15(const std::function<double(double)>& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();

  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  std::array<double, 7> f1{}, f2{};
  const double fc = f(centre);
  double resg = fc * wg[3];
  double resk = fc * wgk[7];
  double resabs = std::abs(resk);

  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    f1[j] = f(centre - dx);
    f2[j] = f(centre + dx);
    const double sum = f1[j] + f2[j];
    resk += wgk[j] * sum;
    resabs += wgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += wg[j / 2] * sum;
  }

  const double mean = 0.5 * resk;
  double resasc = wgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += wgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  Result out;
  out.value = resk * half;
  resabs *= abs_half;
  resasc *= abs_half;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > uflow / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  out.abs_error = err;
  out.subdivisions = 1;
  out.evaluations = 15;
  return out;
}

Result adaptive(const std::function<double(double)>& f, double a, double b, const Tolerance& tol) {
  if (!(tol.rel_tol > 0.0) || tol.abs_tol < 0.0 || tol.max_subdivisions < 1)
    throw OutOfDomain("invalid quadrature tolerance");

  std::priority_queue<Panel> panels;
  Result first = gauss_kronrod15(f, a, b);
  double total = first.value;
  double total_err = first.abs_error;
  int evaluations = first.evaluations;
  panels.push({a, b, first});

  auto target = [&] { return std::max(tol.abs_tol, tol.rel_tol * std::abs(total)); };

  while (total_err > target()) {
    if (static_cast<int>(panels.size()) >= tol.max_subdivisions)
      throw NonConvergent("adaptive quadrature exhausted " + std::to_string(tol.max_subdivisions) +
                          " subdivisions (estimated error " + std::to_string(total_err) + ")");
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw NonConvergent("adaptive quadrature cannot bisect further");
    Result left = gauss_kronrod15(f, worst.a, mid);
    Result right = gauss_kronrod15(f, mid, worst.b);
    evaluations += left.evaluations + right.evaluations;
    total += left.value + right.value - worst.r.value;
    total_err += left.abs_error + right.abs_error - worst.r.abs_error;
    panels.push({worst.a, mid, left});
    panels.push({mid, worst.b, right});
  }

  // Re-sum from scratch so the running-update drift does not leak into the value.
  Result out;
  out.subdivisions = static_cast<int>(panels.size());
  out.evaluations = evaluations;
  std::vector<Panel> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  for (const auto& p : all) {
    out.value += p.r.value;
    out.abs_error += p.r.abs_error;
  }
  return out;
}

Result half_line(const std::function<double(double)>& f, HalfLineMap map, double scale, const Tolerance& tol) {
  if (!(scale > 0.0)) throw OutOfDomain("half-line map scale must be positive");
  std::function<double(double)> g;
  switch (map) {
    case HalfLineMap::Rational:
      g = [&](double u) {
        const double w = 1.0 - u;
        if (w <= 0.0) return 0.0;  // node rounded onto r = inf
        const double r = scale * u / w;
        const double v = f(r);
        return v == 0.0 ? 0.0 : v * scale / (w * w);
      };
      break;
    case HalfLineMap::Logarithmic:
      g = [&](double u) {
        const double w = 1.0 - u;
        if (w <= 0.0) return 0.0;
        const double r = -scale * std::log1p(-u);
        const double v = f(r);
        return v == 0.0 ? 0.0 : v * scale / w;
      };
      break;
  }
  return adaptive(g, 0.0, 1.0, tol);
}

}  // namespace deform::quad
