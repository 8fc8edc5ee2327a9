#pragma once

#include <cstdint>

namespace nsv {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Uniform periodic grid on [0, L)^3 with wavenumbers at integer multiples of
/// 2*pi/L. FFT slot i maps to the signed mode index i for i < N/2 and i - N
/// otherwise, so the retained index set after dealiasing is symmetric under
/// negation (the self-conjugate Nyquist plane N/2 is always kept zero).
class Grid {
  public:
    Grid(int dimension, int points_per_dim, double box_length);

    int dimension() const { return dim_; }
    int points_per_dim() const { return npts_; }
    double box_length() const { return length_; }

    /// Smallest nonzero wavenumber magnitude, 2*pi/L.
    double dk() const { return kTwoPi / length_; }
    double dx() const { return length_ / npts_; }

    std::int64_t total_points() const {
      std::int64_t n = npts_;
      return n * n * n;
    }

    int mode_index(int slot) const { return slot < npts_ / 2 ? slot : slot - npts_; }
    int conjugate_slot(int slot) const { return slot == 0 ? 0 : npts_ - slot; }
    double wavenumber(int slot) const { return dk() * mode_index(slot); }

    std::int64_t flat_index(int i, int j, int l) const {
      return (static_cast<std::int64_t>(i) * npts_ + j) * npts_ + l;
    }

    /// Largest mode index kept by the 2/3 dealiasing rule, floor(N/3).
    int dealias_limit() const { return npts_ / 3; }

    bool operator==(const Grid&) const = default;

  private:
    int dim_;
    int npts_;
    double length_;
};

}  // namespace nsv
