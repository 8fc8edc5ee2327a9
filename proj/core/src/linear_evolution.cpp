#include "nsvlab/linear_evolution.hpp"

#include <cmath>
#include <limits>

#include "nsvlab/errors.hpp"
#include "nsvlab/quadrature.hpp"

namespace nsv {

SpectralVectorField evolve_linear(const SpectralVectorField& u0,
                                  const PhysicsParams& params, double t) {
  return apply_voigt_multiplier(u0, params, t);
}

namespace {

struct LogMoment {
    double log_value;
    bool converged;
    double rel_error;
};

// log of integral over the support of sigma^(2s) a^2 sigma^(n-1) e^(-theta(sigma) t),
// with the decay factor at the inner support edge factored out so the
// quadrature sees an O(1) integrand even when the result underflows.
LogMoment evolved_log_moment(const ContinuumDatum& datum, int s,
                             const PhysicsParams& params, double t, double rel_tol) {
  const int n = datum.dimension();
  const double lo = datum.support_lo();
  const double hi = datum.support_hi();
  const double theta_lo = energy_decay_rate(lo, params);

  auto mass_density = [&](double sigma) {
    return std::pow(sigma, 2.0 * s + n - 1.0) * datum.amplitude_sq(sigma);
  };

  // The critical-log L2 mass converges only logarithmically at the origin;
  // split off the origin analytically and integrate the complement, whose
  // integrand vanishes there.
  if (s == 0 && datum.params().family == ProfileFamily::CriticalLog) {
    const double eps = std::min(0.5 * hi, 1.0 / std::sqrt(1.0 + 2.0 * params.nu * t));
    auto complement = [&](double sigma) {
      return -std::expm1(-energy_decay_rate(sigma, params) * t) * mass_density(sigma);
    };
    auto damped = [&](double sigma) {
      return std::exp(-energy_decay_rate(sigma, params) * t) * mass_density(sigma);
    };
    const double head = *datum.analytic_moment(0, eps);
    const QuadratureResult q1 = integrate_adaptive(complement, 0.0, eps, rel_tol,
                                                   rel_tol * head);
    const QuadratureResult q2 = integrate_adaptive(damped, eps, hi, rel_tol,
                                                   rel_tol * head);
    const double total = head - q1.value + q2.value;
    const double err = q1.abs_error + q2.abs_error;
    return {total > 0.0 ? std::log(total) : -std::numeric_limits<double>::infinity(),
            q1.converged && q2.converged, total > 0.0 ? err / total : err};
  }

  auto integrand = [&](double sigma) {
    const double theta = energy_decay_rate(sigma, params);
    return std::exp(-(theta - theta_lo) * t) * mass_density(sigma);
  };
  const QuadratureResult q = integrate_adaptive(integrand, lo, hi, rel_tol, 0.0, 8000);
  const double log_value = q.value > 0.0
                               ? -theta_lo * t + std::log(q.value)
                               : -std::numeric_limits<double>::infinity();
  return {log_value, q.converged, q.achieved_rel_error()};
}

}  // namespace

EvolvedNorms linear_norms_at(const ContinuumDatum& datum, const PhysicsParams& params,
                             double t, double rel_tol) {
  if (t < 0.0) throw ValidationError("linear_norms_at: t < 0 (forward evolution only)");
  const int n = datum.dimension();
  const double area = unit_sphere_area(n);
  const LogMoment m0 = evolved_log_moment(datum, 0, params, t, rel_tol);
  const LogMoment m1 = evolved_log_moment(datum, 1, params, t, rel_tol);

  EvolvedNorms out;
  out.log_l2_sq = std::log(area) + m0.log_value;
  out.log_h1dot_sq = std::log(area) + m1.log_value;
  // log(l2 + alpha^2 h1dot), evaluated stably in log space.
  const double la = out.log_l2_sq;
  const double lb = params.alpha > 0.0
                        ? 2.0 * std::log(params.alpha) + out.log_h1dot_sq
                        : -std::numeric_limits<double>::infinity();
  const double top = std::max(la, lb);
  out.log_h1alpha_sq =
      std::isfinite(top) ? top + std::log1p(std::exp(std::min(la, lb) - top)) : top;
  out.converged = m0.converged && m1.converged;
  out.achieved_rel_error = std::max(m0.rel_error, m1.rel_error);
  return out;
}

LinearSeriesResult linear_norm_series(const ContinuumDatum& datum,
                                      const std::vector<double>& times,
                                      const PhysicsParams& params) {
  LinearSeriesResult out;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const EvolvedNorms norms = linear_norms_at(datum, params, times[i]);
    out.series.push_logs(times[i], norms.log_l2_sq, norms.log_h1dot_sq,
                         norms.log_h1alpha_sq);
    if (!norms.converged) out.failed_samples.push_back(i);
  }
  out.series.validate();
  return out;
}

NormSeries linear_norm_series_grid(const SpectralVectorField& u0,
                                   const std::vector<double>& times,
                                   const PhysicsParams& params) {
  NormSeries out;
  for (double t : times) {
    const SpectralVectorField ut = apply_voigt_multiplier(u0, params, t);
    const NormTriple norms = h1alpha_norm_sq(ut, params);
    out.push_values(t, norms.l2_sq, norms.h1dot_sq, norms.h1alpha_sq);
  }
  out.validate();
  return out;
}

LinearExponentPrediction predicted_linear_exponent(const DecayCharacter& r_star, int n) {
  switch (r_star.kind) {
    case DecayCharacter::Kind::MinusNHalf:
      return {LinearDecayClass::SlowerThanAlgebraic, 0.0};
    case DecayCharacter::Kind::Infinite:
      return {LinearDecayClass::FasterThanAlgebraic, 0.0};
    default:
      if (r_star.value < -0.5 * n)
        throw ValidationError("predicted_linear_exponent: r* < -n/2");
      return {LinearDecayClass::Algebraic, 0.5 * n + r_star.value};
  }
}

}  // namespace nsv
