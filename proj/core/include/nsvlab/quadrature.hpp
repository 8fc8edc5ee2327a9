#pragma once

#include <functional>

namespace nsv {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;  // estimated
    bool converged = false;
    int panels = 0;

    double achieved_rel_error() const {
      return value != 0.0 ? abs_error / std::abs(value) : abs_error;
    }
};

/// Globally adaptive Gauss-Kronrod (G7/K15) integration of f on [a, b].
/// Panels are bisected largest-error-first until the summed error estimate
/// drops below max(rel_tol * |integral|, abs_tol) or the panel budget runs
/// out. Integrable endpoint singularities converge by repeated bisection
/// toward the endpoint; logarithmically divergent tails do not, and are
/// reported via converged = false with the achieved error.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double rel_tol = 1e-10,
                                    double abs_tol = 0.0, int max_panels = 4000);

}  // namespace nsv
