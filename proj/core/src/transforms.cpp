#include "nsvlab/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "nsvlab/errors.hpp"

namespace nsv {

namespace {

struct PlanPair {
    fftw_plan forward = nullptr;
    fftw_plan backward = nullptr;
};

// Plans are created once per grid size with deterministic (FFTW_ESTIMATE)
// planning and no alignment assumptions, then executed through the new-array
// interface. fftw_execute_dft is reentrant; only plan creation needs a lock.
PlanPair& plans_for(int n) {
  static std::mutex mutex;
  static std::map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const std::size_t total = static_cast<std::size_t>(n) * n * n;
  fftw_complex* a = fftw_alloc_complex(total);
  fftw_complex* b = fftw_alloc_complex(total);
  PlanPair p;
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  p.forward = fftw_plan_dft_3d(n, n, n, a, b, FFTW_FORWARD, flags);
  p.backward = fftw_plan_dft_3d(n, n, n, a, b, FFTW_BACKWARD, flags);
  fftw_free(a);
  fftw_free(b);
  return cache.emplace(n, p).first->second;
}

struct Scratch {
    std::vector<Complex> in;
    std::vector<Complex> out;
};

Scratch& scratch_for(std::size_t total) {
  thread_local std::map<std::size_t, Scratch> cache;
  Scratch& s = cache[total];
  s.in.resize(total);
  s.out.resize(total);
  return s;
}

fftw_complex* as_fftw(std::vector<Complex>& v) {
  return reinterpret_cast<fftw_complex*>(v.data());
}

}  // namespace

void forward_scalar(const Grid& grid, const std::vector<double>& physical,
                    std::vector<Complex>& spectral) {
  const auto total = static_cast<std::size_t>(grid.total_points());
  if (physical.size() != total)
    throw StructuralError("forward_scalar: sample count does not match grid");
  PlanPair& plans = plans_for(grid.points_per_dim());
  Scratch& s = scratch_for(total);
  for (std::size_t i = 0; i < total; ++i) s.in[i] = Complex{physical[i], 0.0};
  fftw_execute_dft(plans.forward, as_fftw(s.in), as_fftw(s.out));
  spectral.resize(total);
  const double norm = 1.0 / static_cast<double>(total);
  for (std::size_t i = 0; i < total; ++i) spectral[i] = s.out[i] * norm;
}

void inverse_scalar(const Grid& grid, const std::vector<Complex>& spectral,
                    std::vector<double>& physical) {
  const auto total = static_cast<std::size_t>(grid.total_points());
  if (spectral.size() != total)
    throw StructuralError("inverse_scalar: coefficient count does not match grid");
  PlanPair& plans = plans_for(grid.points_per_dim());
  Scratch& s = scratch_for(total);
  std::copy(spectral.begin(), spectral.end(), s.in.begin());
  fftw_execute_dft(plans.backward, as_fftw(s.in), as_fftw(s.out));
  physical.resize(total);
  for (std::size_t i = 0; i < total; ++i) physical[i] = s.out[i].real();
}

PhysicalVectorField to_physical(const SpectralVectorField& field) {
  PhysicalVectorField out(field.grid());
  for (int c = 0; c < 3; ++c)
    inverse_scalar(field.grid(), field.component(c), out.values[c]);
  return out;
}

SpectralVectorField to_spectral(const PhysicalVectorField& field) {
  SpectralVectorField out(field.grid);
  double total_sq = 0.0;
  double mean_sq = 0.0;
  for (int c = 0; c < 3; ++c) {
    forward_scalar(field.grid, field.values[c], out.component(c));
    for (const Complex& v : out.component(c)) total_sq += std::norm(v);
    mean_sq += std::norm(out.component(c)[0]);
  }
  if (mean_sq > 1e-16 * total_sq && mean_sq > 0.0)
    throw ValidationError(
        "to_spectral: field has a nonzero mean; velocity fields are mean-free");
  for (int c = 0; c < 3; ++c) out.component(c)[0] = Complex{0.0, 0.0};
  return out;
}

SpectralVectorField transform_roundtrip(const SpectralVectorField& field) {
  return to_spectral(to_physical(field));
}

}  // namespace nsv
