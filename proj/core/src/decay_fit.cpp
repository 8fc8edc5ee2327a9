#include "nsvlab/decay_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nsvlab/errors.hpp"

namespace nsv {

namespace {
double safe_log(double v) {
  return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
}
}  // namespace

void NormSeries::push_values(double t, double l2, double h1dot, double h1alpha) {
  times.push_back(t);
  l2_sq.push_back(l2);
  h1dot_sq.push_back(h1dot);
  h1alpha_sq.push_back(h1alpha);
  log_l2_sq.push_back(safe_log(l2));
  log_h1dot_sq.push_back(safe_log(h1dot));
  log_h1alpha_sq.push_back(safe_log(h1alpha));
}

void NormSeries::push_logs(double t, double log_l2, double log_h1dot,
                           double log_h1alpha) {
  times.push_back(t);
  l2_sq.push_back(std::exp(log_l2));
  h1dot_sq.push_back(std::exp(log_h1dot));
  h1alpha_sq.push_back(std::exp(log_h1alpha));
  log_l2_sq.push_back(log_l2);
  log_h1dot_sq.push_back(log_h1dot);
  log_h1alpha_sq.push_back(log_h1alpha);
}

void NormSeries::validate() const {
  const std::size_t n = times.size();
  if (l2_sq.size() != n || h1dot_sq.size() != n || h1alpha_sq.size() != n ||
      log_l2_sq.size() != n || log_h1dot_sq.size() != n || log_h1alpha_sq.size() != n)
    throw StructuralError("NormSeries: column lengths differ");
  for (std::size_t i = 1; i < n; ++i)
    if (!(times[i] > times[i - 1]))
      throw ValidationError("NormSeries: times must be strictly increasing");
}

const std::vector<double>& log_column(const NormSeries& s, NormComponent c) {
  switch (c) {
    case NormComponent::L2: return s.log_l2_sq;
    case NormComponent::H1Dot: return s.log_h1dot_sq;
    default: return s.log_h1alpha_sq;
  }
}

SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  SlopeFit out;
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw ValidationError("fit_line: need >= 2 paired samples");
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw ValidationError("fit_line: degenerate abscissae");
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (out.intercept + out.slope * x[i]);
    ss += r * r;
  }
  out.rms_residual = std::sqrt(ss / n);
  out.n_samples = n;
  return out;
}

namespace {

struct OffsetFit {
    double p, a, sse;
};

// For fixed offset B, the model log y = a - p log(B + t) is linear.
OffsetFit fit_for_offset(const std::vector<double>& t, const std::vector<double>& ly,
                         double b) {
  const std::size_t n = t.size();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::log(b + t[i]);
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += ly[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (ly[i] - my);
  }
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  const double a = my - slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = ly[i] - (a + slope * x[i]);
    sse += r * r;
  }
  return {-slope, a, sse};
}

}  // namespace

DecayFitResult fit_decay_exponent(const std::vector<double>& times,
                                  const std::vector<double>& log_values,
                                  double window_t0, double window_t1) {
  std::vector<double> t, ly;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < window_t0 || times[i] > window_t1) continue;
    if (!std::isfinite(log_values[i]))
      throw ValidationError("fit_decay_exponent: nonpositive value inside fit window");
    t.push_back(times[i]);
    ly.push_back(log_values[i]);
  }
  if (t.size() < 8)
    throw ValidationError("fit_decay_exponent: fewer than 8 samples in window");

  // Golden-section search over the offset; SSE(B) is smooth and unimodal in
  // practice since B only matters near the window's left edge.
  const double b_hi = 10.0 * t.front() + 1.0;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.0, hi = b_hi;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = fit_for_offset(t, ly, x1).sse;
  double f2 = fit_for_offset(t, ly, x2).sse;
  for (int it = 0; it < 200 && (hi - lo) > 1e-12 * (1.0 + hi); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = fit_for_offset(t, ly, x1).sse;
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = fit_for_offset(t, ly, x2).sse;
    }
  }
  const double b_best = 0.5 * (lo + hi);
  // A zero offset can be the true optimum; prefer it when not worse.
  const OffsetFit interior = fit_for_offset(t, ly, b_best);
  const OffsetFit at_zero = fit_for_offset(t, ly, 0.0);
  const bool use_zero = at_zero.sse <= interior.sse;
  const OffsetFit& best = use_zero ? at_zero : interior;

  DecayFitResult out;
  out.exponent = best.p;
  out.amplitude = std::exp(best.a);
  out.offset = use_zero ? 0.0 : b_best;
  out.t0 = t.front();
  out.t1 = t.back();
  out.rms_residual = std::sqrt(best.sse / t.size());
  out.n_samples = t.size();
  return out;
}

DecayFitResult fit_decay_exponent(const NormSeries& series, NormComponent component,
                                  double window_t0, double window_t1) {
  return fit_decay_exponent(series.times, log_column(series, component), window_t0,
                            window_t1);
}

DecadeSlopes per_decade_slopes(const std::vector<double>& times,
                               const std::vector<double>& log_values, double t0,
                               double t1) {
  DecadeSlopes out;
  if (!(t0 > 0.0) || !(t1 > t0))
    throw ValidationError("per_decade_slopes: need 0 < t0 < t1");
  const int d0 = static_cast<int>(std::floor(std::log10(t0) + 1e-12));
  const int d1 = static_cast<int>(std::ceil(std::log10(t1) - 1e-12));
  for (int d = d0; d < d1; ++d) {
    const double lo = std::pow(10.0, d);
    const double hi = std::pow(10.0, d + 1);
    std::vector<double> x, y;
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (times[i] < lo || times[i] > hi || times[i] < t0 || times[i] > t1) continue;
      if (!std::isfinite(log_values[i])) continue;
      x.push_back(std::log(times[i]));
      y.push_back(log_values[i]);
    }
    if (x.size() < 3) continue;
    out.decade_start.push_back(lo);
    out.slope.push_back(-fit_line(x, y).slope);
  }
  return out;
}

std::vector<double> log_spaced_times(double t0, double t1, int per_decade) {
  if (!(t0 > 0.0) || !(t1 > t0) || per_decade < 1)
    throw ValidationError("log_spaced_times: need 0 < t0 < t1 and per_decade >= 1");
  std::vector<double> out;
  const double step = std::log(10.0) / per_decade;
  const int n = static_cast<int>(std::ceil(std::log(t1 / t0) / step));
  for (int i = 0; i < n; ++i) {
    const double t = t0 * std::exp(i * step);
    if (t < t1 * (1.0 - 1e-12)) out.push_back(t);
  }
  out.push_back(t1);
  return out;
}

}  // namespace nsv
