#pragma once

#include "nsvlab/physics.hpp"
#include "nsvlab/spectral_field.hpp"

namespace nsv {

/// Parseval norms of a velocity field: l2_sq = L^3 sum |uhat|^2,
/// h1dot_sq = L^3 sum |k|^2 |uhat|^2, and their alpha-combination.
struct NormTriple {
    double l2_sq = 0.0;
    double h1dot_sq = 0.0;
    double h1alpha_sq = 0.0;
};

/// Per-mode orthogonal projection onto divergence-free fields,
/// uhat -> uhat - k (k.uhat)/|k|^2, with the zero mode pinned to zero.
/// Idempotent; eliminates any pressure-gradient component.
SpectralVectorField leray_project(SpectralVectorField field);
void leray_project_inplace(SpectralVectorField& field);

/// Zero every coefficient whose mode index exceeds floor(N/3) on any axis
/// (2/3 rule for the quadratic term). Idempotent.
NonlinearFlux dealias(NonlinearFlux flux);
void dealias_inplace(SpectralVectorField& field);

/// Re-enforce uhat(-k) = conj(uhat(k)) by averaging conjugate slot pairs;
/// zeroes the self-conjugate Nyquist planes and the mean mode.
void symmetrize_hermitian(SpectralVectorField& field);

/// Largest |uhat(-k) - conj(uhat(k))| over all modes, scaled by the largest
/// coefficient magnitude. Zero for a field that is real in physical space.
double hermitian_asymmetry(const SpectralVectorField& field);

/// max over modes of |k.uhat| / (|k| |uhat|); 0 for empty fields.
double max_relative_divergence(const SpectralVectorField& field);

NormTriple h1alpha_norm_sq(const SpectralVectorField& field, const PhysicsParams& params);

/// Exact linear evolution on the grid: multiply each mode by the Voigt factor.
SpectralVectorField apply_voigt_multiplier(const SpectralVectorField& field,
                                           const PhysicsParams& params, double t);

/// w = a - b (grids must match).
SpectralVectorField field_difference(const SpectralVectorField& a,
                                     const SpectralVectorField& b);

}  // namespace nsv
