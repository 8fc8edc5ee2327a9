#include "nsvlab/decay_character.hpp"

#include <cmath>
#include <sstream>

#include "nsvlab/errors.hpp"
#include "nsvlab/radial_profile.hpp"

namespace nsv {

std::string to_string(const DecayCharacter& r) {
  switch (r.kind) {
    case DecayCharacter::Kind::Infinite: return "infinity";
    case DecayCharacter::Kind::MinusNHalf: return "minus-n-half";
    default: {
      std::ostringstream os;
      os << r.value;
      return os.str();
    }
  }
}

DecayCharacter character_from_string(const std::string& text) {
  if (text == "infinity" || text == "inf") return DecayCharacter::infinite();
  if (text == "minus-n-half") return {DecayCharacter::Kind::MinusNHalf, 0.0};
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos == text.size()) return DecayCharacter::finite(v);
  } catch (const std::exception&) {
  }
  throw ValidationError("cannot parse decay character: " + text);
}

DecayCharacter shift_character(const DecayCharacter& r_star, int s) {
  if (s < 0) throw ValidationError("shift_character: s must be >= 0");
  switch (r_star.kind) {
    case DecayCharacter::Kind::Infinite:
      return DecayCharacter::infinite();
    case DecayCharacter::Kind::MinusNHalf:
      return {DecayCharacter::Kind::MinusNHalf, r_star.value + s};
    default:
      return DecayCharacter::finite(r_star.value + s);
  }
}

double decay_indicator(const ContinuumDatum& datum, double r, int s, double rho,
                       MomentPolicy policy) {
  const int n = datum.dimension();
  if (!(rho > 0.0) || rho > datum.support_hi())
    throw ValidationError("decay_indicator: rho must lie in (0, kappa]");
  if (!(r > -0.5 * n + s))
    throw ValidationError("decay_indicator: r must exceed -n/2 + s");
  const double mass = radial_moment(datum, s, rho, policy);
  return std::pow(rho, -2.0 * r - n) * unit_sphere_area(n) * mass;
}

DecayCharacterEstimate estimate_decay_character(const ContinuumDatum& datum,
                                                const EstimateOptions& opts) {
  const int n = datum.dimension();
  const int s = opts.s;
  DecayCharacterEstimate out;
  out.s = s;
  out.rho_min = opts.rho_lo_frac * datum.support_hi();
  out.rho_max = opts.rho_hi_frac * datum.support_hi();

  std::vector<double> log_rho, log_mass;
  const double step = std::log(out.rho_max / out.rho_min) / (opts.samples - 1);
  for (int i = 0; i < opts.samples; ++i) {
    const double rho = out.rho_min * std::exp(i * step);
    const double mass = radial_moment(datum, s, rho);
    if (mass <= 0.0) continue;
    log_rho.push_back(std::log(rho));
    log_mass.push_back(std::log(mass));
  }

  // No spectral mass near the origin: the indicator vanishes for every r.
  if (log_rho.size() < 8) {
    out.r_star = DecayCharacter::infinite();
    out.r_star_s = DecayCharacter::infinite();
    return out;
  }

  const SlopeFit fit = fit_line(log_rho, log_mass);
  out.slope_fit.exponent = fit.slope;
  out.slope_fit.amplitude = std::exp(fit.intercept);
  out.slope_fit.offset = 0.0;
  out.slope_fit.t0 = out.rho_min;
  out.slope_fit.t1 = out.rho_max;
  out.slope_fit.rms_residual = fit.rms_residual;
  out.slope_fit.n_samples = fit.n_samples;
  out.pure_power_law = fit.rms_residual <= opts.residual_warning;

  const double r_s = 0.5 * (fit.slope - n);
  const double r = r_s - s;
  const double boundary = -0.5 * n;
  if (r <= boundary + opts.boundary_margin) {
    out.r_star = DecayCharacter::minus_n_half(n);
    out.r_star_s = {DecayCharacter::Kind::MinusNHalf, boundary + s};
  } else if (r >= opts.r_ceiling - opts.boundary_margin) {
    out.r_star = DecayCharacter::infinite();
    out.r_star_s = DecayCharacter::infinite();
  } else {
    out.r_star = DecayCharacter::finite(r);
    out.r_star_s = DecayCharacter::finite(r_s);
  }
  return out;
}

}  // namespace nsv
