#pragma once

#include <string>

#include "nsvlab/decay_fit.hpp"

namespace nsv {

class ContinuumDatum;

/// r*: the power-law order of |u0_hat(xi)|^2 at the origin. Finite values are
/// the generic case; the two boundary sentinels mark data whose indicator
/// diverges for every admissible r (MinusNHalf) or vanishes for every r
/// (Infinite). For MinusNHalf the numeric value holds the boundary number
/// -n/2 (+s after shifts), so it can still be printed and compared.
struct DecayCharacter {
    enum class Kind { Finite, MinusNHalf, Infinite };
    Kind kind = Kind::Finite;
    double value = 0.0;

    static DecayCharacter finite(double v) { return {Kind::Finite, v}; }
    static DecayCharacter minus_n_half(int n) {
      return {Kind::MinusNHalf, -0.5 * n};
    }
    static DecayCharacter infinite() { return {Kind::Infinite, 0.0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool operator==(const DecayCharacter&) const = default;
};

std::string to_string(const DecayCharacter& r);
DecayCharacter character_from_string(const std::string& text);

/// Character of the s-th derivative: finite r* -> r* + s, the sentinels are
/// preserved (MinusNHalf keeps tracking its boundary value -n/2 + s).
DecayCharacter shift_character(const DecayCharacter& r_star, int s);

/// Finite-radius approximant of the s-decay indicator,
/// rho^(-2r-n) * integral over B(rho) of |xi|^(2s) a(|xi|)^2 dxi,
/// computed by adaptive radial quadrature (relative tolerance 1e-10).
/// Requires rho in (0, kappa] and r > -n/2 + s.
enum class MomentPolicy {
    QuadratureWithAnalyticFallback,  // default: fall back to the family's
                                     // closed form when quadrature cannot
                                     // converge (log-critical data)
    QuadratureOnly,                  // nonconvergence raises NumericalError
};
double decay_indicator(const ContinuumDatum& datum, double r, int s, double rho,
                       MomentPolicy policy = MomentPolicy::QuadratureWithAnalyticFallback);

struct DecayCharacterEstimate {
    DecayCharacter r_star;    // character of the datum
    DecayCharacter r_star_s;  // character of the s-th derivative (as fitted)
    int s = 0;
    /// Fit of log mass(rho) against log rho; `exponent` holds the fitted
    /// slope p (mass grows like rho^p), `amplitude` exp(intercept), offset 0.
    DecayFitResult slope_fit;
    double rho_min = 0.0;
    double rho_max = 0.0;
    /// False when the fit residual exceeds the pure-power-law threshold.
    bool pure_power_law = true;
};

struct EstimateOptions {
    int s = 0;
    /// Window [rho_lo_frac, rho_hi_frac] * kappa; near xi = 0 but above
    /// roundoff at tiny radii.
    double rho_lo_frac = 1e-3;
    double rho_hi_frac = 1e-1;
    int samples = 32;
    /// Fitted r* within this margin of the boundary -n/2 + s classifies as
    /// the MinusNHalf sentinel; slopes steeper than r_ceiling classify as
    /// Infinite. The sentinel cases are limits, only detectable as threshold
    /// exceedance.
    double boundary_margin = 0.1;
    double r_ceiling = 20.0;
    double residual_warning = 0.01;
};

/// Estimate r* by fitting the slope of log F(rho) = log of the cumulative
/// spectral mass against log rho: r_s* = (slope - n)/2, r* = r_s* - s. The
/// indicator itself is 0-or-infinity off the critical r and numerically
/// ill-posed; the cumulative slope is the stable observable.
DecayCharacterEstimate estimate_decay_character(const ContinuumDatum& datum,
                                                const EstimateOptions& opts = {});

}  // namespace nsv
