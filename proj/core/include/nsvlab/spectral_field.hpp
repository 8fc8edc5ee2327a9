#pragma once

#include <array>
#include <complex>
#include <vector>

#include "nsvlab/grid.hpp"

namespace nsv {

using Complex = std::complex<double>;

/// Three-component velocity field stored as full complex Fourier coefficients,
/// one array per component, row-major over FFT slots (last axis fastest).
///
/// Conventions: u(x) = sum_k uhat(k) exp(i k.x). The k = 0 coefficient is
/// pinned to zero (mean-free velocity) and coefficients carry Hermitian
/// symmetry uhat(-k) = conj(uhat(k)) so the physical field is real. The
/// redundancy is deliberate: the symmetry is re-enforced and checkable after
/// every nonlinear evaluation instead of being baked into the storage.
class SpectralVectorField {
  public:
    explicit SpectralVectorField(const Grid& grid);

    const Grid& grid() const { return grid_; }

    std::vector<Complex>& component(int c) { return data_[c]; }
    const std::vector<Complex>& component(int c) const { return data_[c]; }

    Complex& at(int c, std::int64_t flat) { return data_[c][flat]; }
    const Complex& at(int c, std::int64_t flat) const { return data_[c][flat]; }

    void set_zero();

    /// y += a * x over all coefficients (grids must match).
    void axpy(double a, const SpectralVectorField& x);
    void scale(double a);

  private:
    Grid grid_;
    std::array<std::vector<Complex>, 3> data_;
};

/// Real-space samples of a velocity field on the same grid.
struct PhysicalVectorField {
    explicit PhysicalVectorField(const Grid& g);
    Grid grid;
    std::array<std::vector<double>, 3> values;
};

/// Spectrum of the projected quadratic momentum flux. Same storage as a
/// velocity field, distinct type so states and fluxes cannot be mixed up.
struct NonlinearFlux {
    explicit NonlinearFlux(const Grid& g) : spectrum(g) {}
    SpectralVectorField spectrum;
};

}  // namespace nsv
