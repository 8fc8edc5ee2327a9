#pragma once

namespace nsv {

/// Fluid parameters of the regularized momentum equation. alpha is the
/// regularization length, nu the viscosity.
struct PhysicsParams {
    double alpha = 0.0;
    double nu = 1.0;
    int dimension = 3;

    /// The decay theorems assume nu > alpha^2. Runs violating it are allowed
    /// but reports mark them as outside the hypotheses.
    bool within_theorem_hypotheses() const { return nu > alpha * alpha; }

    void validate() const;
};

/// Exact per-mode decay factor of the linear semigroup,
/// exp(-nu k^2 t / (1 + alpha^2 k^2)). Nonincreasing in both t and |k|;
/// bounded below by exp(-nu t / alpha^2) for alpha > 0, so high frequencies
/// are damped but never smoothed away. Rejects t < 0 (forward evolution only).
double voigt_multiplier(double k_mag, const PhysicsParams& p, double t);

/// 1 / (1 + alpha^2 k^2): spectral inverse of u - alpha^2 laplacian(u).
double helmholtz_inverse_factor(double k_mag, const PhysicsParams& p);

/// Decay rate of |u_hat(k)|^2 under the linear flow: 2 nu k^2 / (1 + alpha^2 k^2).
double energy_decay_rate(double k_mag, const PhysicsParams& p);

}  // namespace nsv
