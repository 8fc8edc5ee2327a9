#include "nsvlab/operators.hpp"

#include <cmath>

#include "nsvlab/errors.hpp"

namespace nsv {

void leray_project_inplace(SpectralVectorField& field) {
  const Grid& g = field.grid();
  const int n = g.points_per_dim();
  for (int i = 0; i < n; ++i) {
    const double kx = g.wavenumber(i);
    for (int j = 0; j < n; ++j) {
      const double ky = g.wavenumber(j);
      for (int l = 0; l < n; ++l) {
        const double kz = g.wavenumber(l);
        const std::int64_t idx = g.flat_index(i, j, l);
        const double k2 = kx * kx + ky * ky + kz * kz;
        if (k2 == 0.0) {
          for (int c = 0; c < 3; ++c) field.at(c, idx) = Complex{0.0, 0.0};
          continue;
        }
        const Complex kdotu = kx * field.at(0, idx) + ky * field.at(1, idx) +
                              kz * field.at(2, idx);
        const Complex fac = kdotu / k2;
        field.at(0, idx) -= kx * fac;
        field.at(1, idx) -= ky * fac;
        field.at(2, idx) -= kz * fac;
      }
    }
  }
}

SpectralVectorField leray_project(SpectralVectorField field) {
  leray_project_inplace(field);
  return field;
}

void dealias_inplace(SpectralVectorField& field) {
  const Grid& g = field.grid();
  const int n = g.points_per_dim();
  const int keep = g.dealias_limit();
  for (int i = 0; i < n; ++i) {
    const bool cut_i = std::abs(g.mode_index(i)) > keep;
    for (int j = 0; j < n; ++j) {
      const bool cut_ij = cut_i || std::abs(g.mode_index(j)) > keep;
      for (int l = 0; l < n; ++l) {
        if (!(cut_ij || std::abs(g.mode_index(l)) > keep)) continue;
        const std::int64_t idx = g.flat_index(i, j, l);
        for (int c = 0; c < 3; ++c) field.at(c, idx) = Complex{0.0, 0.0};
      }
    }
  }
}

NonlinearFlux dealias(NonlinearFlux flux) {
  dealias_inplace(flux.spectrum);
  return flux;
}

void symmetrize_hermitian(SpectralVectorField& field) {
  const Grid& g = field.grid();
  const int n = g.points_per_dim();
  const int nyq = n / 2;
  for (int c = 0; c < 3; ++c) {
    auto& data = field.component(c);
    for (int i = 0; i < n; ++i) {
      const int ci = g.conjugate_slot(i);
      for (int j = 0; j < n; ++j) {
        const int cj = g.conjugate_slot(j);
        for (int l = 0; l < n; ++l) {
          const int cl = g.conjugate_slot(l);
          if (i == nyq || j == nyq || l == nyq) {
            data[g.flat_index(i, j, l)] = Complex{0.0, 0.0};
            continue;
          }
          const std::int64_t idx = g.flat_index(i, j, l);
          const std::int64_t cdx = g.flat_index(ci, cj, cl);
          if (cdx < idx) continue;  // pair handled from the lower slot
          const Complex a = data[idx];
          const Complex b = data[cdx];
          const Complex avg = 0.5 * (a + std::conj(b));
          data[idx] = avg;
          data[cdx] = std::conj(avg);
        }
      }
    }
    data[0] = Complex{0.0, 0.0};
  }
}

double hermitian_asymmetry(const SpectralVectorField& field) {
  const Grid& g = field.grid();
  const int n = g.points_per_dim();
  double worst = 0.0;
  double largest = 0.0;
  for (int c = 0; c < 3; ++c) {
    const auto& data = field.component(c);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          const std::int64_t idx = g.flat_index(i, j, l);
          const std::int64_t cdx =
              g.flat_index(g.conjugate_slot(i), g.conjugate_slot(j), g.conjugate_slot(l));
          largest = std::max(largest, std::abs(data[idx]));
          worst = std::max(worst, std::abs(data[cdx] - std::conj(data[idx])));
        }
  }
  return largest > 0.0 ? worst / largest : 0.0;
}

double max_relative_divergence(const SpectralVectorField& field) {
  const Grid& g = field.grid();
  const int n = g.points_per_dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double kx = g.wavenumber(i);
    for (int j = 0; j < n; ++j) {
      const double ky = g.wavenumber(j);
      for (int l = 0; l < n; ++l) {
        const double kz = g.wavenumber(l);
        const double kmag = std::sqrt(kx * kx + ky * ky + kz * kz);
        if (kmag == 0.0) continue;
        const std::int64_t idx = g.flat_index(i, j, l);
        const Complex u0 = field.at(0, idx);
        const Complex u1 = field.at(1, idx);
        const Complex u2 = field.at(2, idx);
        const double umag = std::sqrt(std::norm(u0) + std::norm(u1) + std::norm(u2));
        if (umag == 0.0) continue;
        const double div = std::abs(kx * u0 + ky * u1 + kz * u2);
        worst = std::max(worst, div / (kmag * umag));
      }
    }
  }
  return worst;
}

NormTriple h1alpha_norm_sq(const SpectralVectorField& field, const PhysicsParams& params) {
  const Grid& g = field.grid();
  const int n = g.points_per_dim();
  double l2 = 0.0;
  double h1 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double kx = g.wavenumber(i);
    for (int j = 0; j < n; ++j) {
      const double ky = g.wavenumber(j);
      for (int l = 0; l < n; ++l) {
        const double kz = g.wavenumber(l);
        const double k2 = kx * kx + ky * ky + kz * kz;
        const std::int64_t idx = g.flat_index(i, j, l);
        const double e = std::norm(field.at(0, idx)) + std::norm(field.at(1, idx)) +
                         std::norm(field.at(2, idx));
        l2 += e;
        h1 += k2 * e;
      }
    }
  }
  const double vol = std::pow(g.box_length(), 3);
  NormTriple out;
  out.l2_sq = vol * l2;
  out.h1dot_sq = vol * h1;
  out.h1alpha_sq = out.l2_sq + params.alpha * params.alpha * out.h1dot_sq;
  return out;
}

SpectralVectorField apply_voigt_multiplier(const SpectralVectorField& field,
                                           const PhysicsParams& params, double t) {
  if (t < 0.0)
    throw ValidationError("apply_voigt_multiplier: t < 0 (forward evolution only)");
  SpectralVectorField out(field.grid());
  const Grid& g = field.grid();
  const int n = g.points_per_dim();
  for (int i = 0; i < n; ++i) {
    const double kx = g.wavenumber(i);
    for (int j = 0; j < n; ++j) {
      const double ky = g.wavenumber(j);
      for (int l = 0; l < n; ++l) {
        const double kz = g.wavenumber(l);
        const double kmag = std::sqrt(kx * kx + ky * ky + kz * kz);
        const double m = voigt_multiplier(kmag, params, t);
        const std::int64_t idx = g.flat_index(i, j, l);
        for (int c = 0; c < 3; ++c) out.at(c, idx) = m * field.at(c, idx);
      }
    }
  }
  return out;
}

SpectralVectorField field_difference(const SpectralVectorField& a,
                                     const SpectralVectorField& b) {
  if (!(a.grid() == b.grid())) throw StructuralError("field_difference: grid mismatch");
  SpectralVectorField out = a;
  out.axpy(-1.0, b);
  return out;
}

}  // namespace nsv
