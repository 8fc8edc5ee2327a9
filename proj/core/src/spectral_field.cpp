#include "nsvlab/spectral_field.hpp"

#include "nsvlab/errors.hpp"

namespace nsv {

SpectralVectorField::SpectralVectorField(const Grid& grid) : grid_(grid) {
  const auto n = static_cast<std::size_t>(grid_.total_points());
  for (auto& comp : data_) comp.assign(n, Complex{0.0, 0.0});
}

void SpectralVectorField::set_zero() {
  for (auto& comp : data_)
    std::fill(comp.begin(), comp.end(), Complex{0.0, 0.0});
}

void SpectralVectorField::axpy(double a, const SpectralVectorField& x) {
  if (!(grid_ == x.grid_)) throw StructuralError("axpy: grid mismatch");
  for (int c = 0; c < 3; ++c) {
    const auto& src = x.data_[c];
    auto& dst = data_[c];
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += a * src[i];
  }
}

void SpectralVectorField::scale(double a) {
  for (auto& comp : data_)
    for (auto& v : comp) v *= a;
}

PhysicalVectorField::PhysicalVectorField(const Grid& g) : grid(g) {
  const auto n = static_cast<std::size_t>(grid.total_points());
  for (auto& comp : values) comp.assign(n, 0.0);
}

}  // namespace nsv
