#pragma once

#include <vector>

#include "nsvlab/decay_fit.hpp"
#include "nsvlab/operators.hpp"
#include "nsvlab/radial_profile.hpp"

namespace nsv {

/// Exact linear evolution of a grid-sampled field (per-mode multiplier).
SpectralVectorField evolve_linear(const SpectralVectorField& u0,
                                  const PhysicsParams& params, double t);

/// Squared norms of the multiplier-evolved continuum datum at one time, by
/// adaptive radial quadrature of
///   (weight) * exp(-2 nu rho^2 t / (1 + alpha^2 rho^2)) * a(rho)^2 * rho^(n-1)
/// times the unit-sphere area. Results are returned in log form: deep in the
/// super-algebraic regime the raw values underflow while the logs stay exact
/// (the decay factor at the support edge is pulled out analytically).
struct EvolvedNorms {
    double log_l2_sq = 0.0;
    double log_h1dot_sq = 0.0;
    double log_h1alpha_sq = 0.0;
    bool converged = true;
    double achieved_rel_error = 0.0;
};
EvolvedNorms linear_norms_at(const ContinuumDatum& datum, const PhysicsParams& params,
                             double t, double rel_tol = 1e-8);

/// Norm series of the continuum linear flow over the given times (t >= 0).
/// Quadrature failures are recorded per sample, not fatal.
struct LinearSeriesResult {
    NormSeries series;
    std::vector<std::size_t> failed_samples;
};
LinearSeriesResult linear_norm_series(const ContinuumDatum& datum,
                                      const std::vector<double>& times,
                                      const PhysicsParams& params);

/// Exact-multiplier norm series of a grid-sampled datum (grid-quadrature
/// variant of the above; shares the box's resolution limits).
NormSeries linear_norm_series_grid(const SpectralVectorField& u0,
                                   const std::vector<double>& times,
                                   const PhysicsParams& params);

/// The three regimes of linear decay as classified by r*.
enum class LinearDecayClass { Algebraic, SlowerThanAlgebraic, FasterThanAlgebraic };

struct LinearExponentPrediction {
    LinearDecayClass kind = LinearDecayClass::Algebraic;
    double exponent = 0.0;  // n/2 + r* when algebraic
};

/// finite r* -> n/2 + r*; the boundary sentinels map to the slower/faster
/// than-any-algebraic-rate regimes. Rejects finite r* < -n/2.
LinearExponentPrediction predicted_linear_exponent(const DecayCharacter& r_star, int n);

}  // namespace nsv
