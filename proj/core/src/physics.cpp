#include "nsvlab/physics.hpp"

#include <cmath>

#include "nsvlab/errors.hpp"

namespace nsv {

void PhysicsParams::validate() const {
  if (!(alpha >= 0.0)) throw ValidationError("PhysicsParams: alpha must be >= 0");
  if (!(nu > 0.0)) throw ValidationError("PhysicsParams: nu must be > 0");
  if (dimension < 1) throw ValidationError("PhysicsParams: dimension must be >= 1");
}

double voigt_multiplier(double k_mag, const PhysicsParams& p, double t) {
  if (t < 0.0)
    throw ValidationError("voigt_multiplier: t < 0 (backward evolution not supported)");
  const double k2 = k_mag * k_mag;
  return std::exp(-p.nu * k2 * t / (1.0 + p.alpha * p.alpha * k2));
}

double helmholtz_inverse_factor(double k_mag, const PhysicsParams& p) {
  const double k2 = k_mag * k_mag;
  return 1.0 / (1.0 + p.alpha * p.alpha * k2);
}

double energy_decay_rate(double k_mag, const PhysicsParams& p) {
  const double k2 = k_mag * k_mag;
  return 2.0 * p.nu * k2 / (1.0 + p.alpha * p.alpha * k2);
}

}  // namespace nsv
