#pragma once

#include <vector>

#include "nsvlab/spectral_field.hpp"

namespace nsv {

/// Low-level scalar transforms between a real sample lane and its Fourier
/// coefficients (forward includes the 1/N^3 normalization). Plans are cached
/// per grid size with deterministic planning, so repeated runs are bitwise
/// reproducible. Execution on distinct arrays is thread-safe.
void forward_scalar(const Grid& grid, const std::vector<double>& physical,
                    std::vector<Complex>& spectral);
void inverse_scalar(const Grid& grid, const std::vector<Complex>& spectral,
                    std::vector<double>& physical);

/// Inverse transform of all three components of a velocity field.
PhysicalVectorField to_physical(const SpectralVectorField& field);

/// Forward transform of velocity samples. Rejects fields with a nonzero mean
/// (the zero mode is pinned to zero for mean-free velocities).
SpectralVectorField to_spectral(const PhysicalVectorField& field);

/// inverse(forward(.)) composed on a spectral field; identity up to roundoff.
SpectralVectorField transform_roundtrip(const SpectralVectorField& field);

}  // namespace nsv
