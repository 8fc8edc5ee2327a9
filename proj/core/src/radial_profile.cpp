#include "nsvlab/radial_profile.hpp"

#include <cmath>

#include "nsvlab/errors.hpp"
#include "nsvlab/operators.hpp"
#include "nsvlab/quadrature.hpp"

namespace nsv {

std::string to_string(ProfileFamily f) {
  switch (f) {
    case ProfileFamily::PowerLaw: return "power-law";
    case ProfileFamily::Annulus: return "annulus";
    default: return "critical-log";
  }
}

ProfileFamily family_from_string(const std::string& name) {
  if (name == "power-law") return ProfileFamily::PowerLaw;
  if (name == "annulus") return ProfileFamily::Annulus;
  if (name == "critical-log") return ProfileFamily::CriticalLog;
  throw ValidationError("unknown datum family: " + name);
}

ContinuumDatum ContinuumDatum::make(const DatumParams& p) {
  if (p.dimension < 1) throw ValidationError("datum: dimension must be >= 1");
  if (!(p.kappa > 0.0)) throw ValidationError("datum: kappa must be > 0");
  switch (p.family) {
    case ProfileFamily::PowerLaw:
      if (!(p.q > -0.5 * p.dimension))
        throw ValidationError("power-law datum with q <= -n/2 is not in L2");
      break;
    case ProfileFamily::Annulus:
      if (!(p.delta > 0.0) || !(p.delta < p.kappa))
        throw ValidationError("annulus datum needs 0 < delta < kappa");
      break;
    case ProfileFamily::CriticalLog:
      if (!(p.kappa < std::exp(1.0)))
        throw ValidationError("critical-log datum needs kappa < e");
      break;
  }
  return ContinuumDatum(p);
}

ContinuumDatum make_datum(const DatumParams& params) { return ContinuumDatum::make(params); }

double ContinuumDatum::amplitude_sq(double rho) const {
  if (rho <= 0.0 || rho > params_.kappa) return 0.0;
  switch (params_.family) {
    case ProfileFamily::PowerLaw:
      return std::pow(rho, 2.0 * params_.q);
    case ProfileFamily::Annulus:
      return rho >= params_.delta ? 1.0 : 0.0;
    case ProfileFamily::CriticalLog: {
      const double lg = 1.0 - std::log(rho);  // log(e/rho)
      return std::pow(rho, -static_cast<double>(params_.dimension)) / (lg * lg);
    }
  }
  return 0.0;
}

double ContinuumDatum::support_lo() const {
  return params_.family == ProfileFamily::Annulus ? params_.delta : 0.0;
}

DecayCharacter ContinuumDatum::analytic_character() const {
  switch (params_.family) {
    case ProfileFamily::PowerLaw: return DecayCharacter::finite(params_.q);
    case ProfileFamily::Annulus: return DecayCharacter::infinite();
    default: return DecayCharacter::minus_n_half(params_.dimension);
  }
}

std::optional<double> ContinuumDatum::analytic_moment(int s, double rho) const {
  const int n = params_.dimension;
  const double top = std::min(rho, params_.kappa);
  if (top <= 0.0) return 0.0;
  switch (params_.family) {
    case ProfileFamily::PowerLaw: {
      const double e = 2.0 * s + 2.0 * params_.q + n;
      return std::pow(top, e) / e;
    }
    case ProfileFamily::Annulus: {
      if (top <= params_.delta) return 0.0;
      const double e = 2.0 * s + n;
      return (std::pow(top, e) - std::pow(params_.delta, e)) / e;
    }
    case ProfileFamily::CriticalLog:
      // integrand sigma^(2s-1) / log^2(e/sigma); elementary only for s = 0.
      if (s == 0) return 1.0 / (1.0 - std::log(top));
      return std::nullopt;
  }
  return std::nullopt;
}

bool ContinuumDatum::singular_at_origin(int s) const {
  const int n = params_.dimension;
  switch (params_.family) {
    case ProfileFamily::PowerLaw:
      return 2.0 * s + 2.0 * params_.q + n - 1.0 < 0.0;
    case ProfileFamily::Annulus:
      return false;
    case ProfileFamily::CriticalLog:
      return 2 * s - 1 < 0;
  }
  return false;
}

double unit_sphere_area(int n) {
  return 2.0 * std::pow(std::acos(-1.0), 0.5 * n) / std::tgamma(0.5 * n);
}

double radial_moment(const ContinuumDatum& datum, int s, double rho,
                     MomentPolicy policy) {
  if (!(rho > 0.0)) throw ValidationError("radial_moment: rho must be > 0");
  const int n = datum.dimension();
  const double lo = datum.support_lo();
  const double hi = std::min(rho, datum.support_hi());
  if (hi <= lo) return 0.0;
  auto integrand = [&](double sigma) {
    return std::pow(sigma, 2.0 * s + n - 1.0) * datum.amplitude_sq(sigma);
  };
  const QuadratureResult q = integrate_adaptive(integrand, lo, hi, 1e-10);
  if (q.converged) return q.value;
  if (policy == MomentPolicy::QuadratureWithAnalyticFallback) {
    if (auto exact = datum.analytic_moment(s, hi)) return *exact;
  }
  throw NumericalError("radial_moment: quadrature did not converge (achieved relative error " +
                       std::to_string(q.achieved_rel_error()) + ")");
}

SpectralVectorField sample_on_grid(const ContinuumDatum& datum, const Grid& grid,
                                   double amplitude) {
  if (datum.dimension() != 3)
    throw ValidationError("sample_on_grid: grid sampling needs a 3-d datum");
  SpectralVectorField out(grid);
  const int n = grid.points_per_dim();
  // Fixed direction; its per-mode orthogonal projection is a smooth
  // solenoidal angular pattern.
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const double ex = inv_sqrt3, ey = inv_sqrt3, ez = inv_sqrt3;
  // Grid coefficients carry (2 pi)^{3/2} / L^3 per unit continuum amplitude,
  // so Parseval sums approximate the continuum integrals.
  const double scale =
      amplitude * std::pow(kTwoPi, 1.5) / std::pow(grid.box_length(), 3);
  for (int i = 0; i < n; ++i) {
    const double kx = grid.wavenumber(i);
    for (int j = 0; j < n; ++j) {
      const double ky = grid.wavenumber(j);
      for (int l = 0; l < n; ++l) {
        const double kz = grid.wavenumber(l);
        const double k2 = kx * kx + ky * ky + kz * kz;
        if (k2 == 0.0) continue;
        const double kmag = std::sqrt(k2);
        const double a2 = datum.amplitude_sq(kmag);
        if (a2 == 0.0) continue;
        const double a = std::sqrt(a2) * scale;
        const double kdote = kx * ex + ky * ey + kz * ez;
        const std::int64_t idx = grid.flat_index(i, j, l);
        out.at(0, idx) = Complex{a * (ex - kx * kdote / k2), 0.0};
        out.at(1, idx) = Complex{a * (ey - ky * kdote / k2), 0.0};
        out.at(2, idx) = Complex{a * (ez - kz * kdote / k2), 0.0};
      }
    }
  }
  dealias_inplace(out);
  symmetrize_hermitian(out);
  leray_project_inplace(out);
  return out;
}

void rescale_to_h1alpha(SpectralVectorField& field, const PhysicsParams& params,
                        double target) {
  if (!(target > 0.0)) throw ValidationError("rescale_to_h1alpha: target must be > 0");
  const NormTriple norms = h1alpha_norm_sq(field, params);
  if (!(norms.h1alpha_sq > 0.0))
    throw ValidationError("rescale_to_h1alpha: field is identically zero");
  field.scale(target / std::sqrt(norms.h1alpha_sq));
}

}  // namespace nsv
