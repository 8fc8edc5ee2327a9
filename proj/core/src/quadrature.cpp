#include "nsvlab/quadrature.hpp"

#include <cmath>
#include <cstdint>
#include <map>

namespace nsv {

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    double value;
    double error;
};

PanelEstimate gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(center - half * kXgk[i]);
    fv[14 - i] = f(center + half * kXgk[i]);
  }
  fv[7] = f(center);

  double kronrod = kWgk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  kronrod *= half;
  gauss *= half;

  const double diff = std::abs(kronrod - gauss);
  // QUADPACK-style sharpened error estimate.
  double err = diff;
  if (diff > 0.0) err = diff * std::min(1.0, std::pow(200.0 * diff / (std::abs(kronrod) + 1e-300), 1.5));
  return {kronrod, std::max(err, 1e-18 * std::abs(kronrod))};
}

struct Panel {
    double a, b, value, error;
};

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double rel_tol, double abs_tol,
                                    int max_panels) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  // Work list keyed by (error, insertion order) for deterministic splitting.
  std::map<std::pair<double, std::uint64_t>, Panel> work;
  std::uint64_t seq = 0;
  double total = 0.0;
  double total_err = 0.0;

  auto push = [&](double lo, double hi) {
    const PanelEstimate e = gauss_kronrod(f, lo, hi);
    total += e.value;
    total_err += e.error;
    work.emplace(std::make_pair(e.error, seq++), Panel{lo, hi, e.value, e.error});
  };

  push(a, b);
  out.panels = 1;

  while (out.panels < max_panels) {
    const double target = std::max(rel_tol * std::abs(total), abs_tol);
    if (total_err <= target) break;
    auto worst_it = std::prev(work.end());
    const Panel worst = worst_it->second;
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // width at rounding limit
    work.erase(worst_it);
    total -= worst.value;
    total_err -= worst.error;
    push(worst.a, mid);
    push(mid, worst.b);
    out.panels += 2;
  }

  out.value = total;
  out.abs_error = total_err;
  out.converged = total_err <= std::max(rel_tol * std::abs(total), abs_tol);
  return out;
}

}  // namespace nsv
