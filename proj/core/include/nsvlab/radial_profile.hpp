#pragma once

#include <optional>
#include <string>

#include "nsvlab/decay_character.hpp"
#include "nsvlab/grid.hpp"
#include "nsvlab/physics.hpp"
#include "nsvlab/spectral_field.hpp"

namespace nsv {

enum class ProfileFamily { PowerLaw, Annulus, CriticalLog };

std::string to_string(ProfileFamily f);
ProfileFamily family_from_string(const std::string& name);

struct DatumParams {
    ProfileFamily family = ProfileFamily::PowerLaw;
    int dimension = 3;
    double q = 0.0;      // power-law exponent, q > -n/2
    double kappa = 1.0;  // outer support radius
    double delta = 0.0;  // inner support radius (annulus)
    unsigned long seed = 0;  // recorded for reproducibility of derived artifacts
};

/// Radially structured initial datum given in closed form: a(rho) is the
/// radial amplitude of |u0_hat(xi)| at rho = |xi|. Families:
///   power-law    a(rho) = rho^q on (0, kappa], zero beyond   -> r* = q
///   annulus      a(rho) = 1 on [delta, kappa], zero beyond   -> r* = infinity
///   critical-log a(rho)^2 = rho^-n / log^2(e/rho) on (0, kappa] -> r* = -n/2
class ContinuumDatum {
  public:
    static ContinuumDatum make(const DatumParams& p);

    const DatumParams& params() const { return params_; }
    int dimension() const { return params_.dimension; }
    double amplitude_sq(double rho) const;
    double support_lo() const;
    double support_hi() const { return params_.kappa; }
    DecayCharacter analytic_character() const;

    /// Closed-form integral of sigma^(2s) a(sigma)^2 sigma^(n-1) over (0, rho]
    /// where the family admits one; nullopt otherwise. Serves both as the
    /// fallback for quadrature-resistant integrands (the critical-log L2 mass
    /// converges only logarithmically at the origin) and as a test oracle.
    std::optional<double> analytic_moment(int s, double rho) const;

    /// Integrand of the s-th radial moment is unbounded at the origin.
    bool singular_at_origin(int s) const;

  private:
    explicit ContinuumDatum(const DatumParams& p) : params_(p) {}
    DatumParams params_;
};

/// Construct a datum after validating family parameters (rejects data outside
/// L2, e.g. power-law with q <= -n/2).
ContinuumDatum make_datum(const DatumParams& params);

/// Sample the datum onto a periodic grid: the radial amplitude is assigned to
/// a fixed solenoidal angular pattern (projection of a constant direction)
/// so the sampled field is divergence-free and deterministic. Coefficients
/// are scaled so grid Parseval norms approximate the continuum norms, then
/// multiplied by `amplitude`. The result is dealiased, projected and
/// Hermitian-symmetric.
SpectralVectorField sample_on_grid(const ContinuumDatum& datum, const Grid& grid,
                                   double amplitude = 1.0);

/// Rescale so that the H1_alpha norm (not squared) equals `target`.
void rescale_to_h1alpha(SpectralVectorField& field, const PhysicsParams& params,
                        double target);

/// Radial moment integral over (0, rho]: omega_{n-1} is NOT included.
/// Quadrature first; falls back to the closed form under the default policy.
double radial_moment(const ContinuumDatum& datum, int s, double rho,
                     MomentPolicy policy = MomentPolicy::QuadratureWithAnalyticFallback);

/// Surface area of the unit sphere in R^n: 2 pi^(n/2) / Gamma(n/2).
double unit_sphere_area(int n);

}  // namespace nsv
