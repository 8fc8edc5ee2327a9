#pragma once

#include <vector>

#include "nsvlab/decay_fit.hpp"
#include "nsvlab/operators.hpp"

namespace nsv {

struct SolverConfig {
    Grid grid;
    PhysicsParams params;
    /// Maximum RK4 step. Knot intervals (sample/snapshot times) are split
    /// into equal substeps no longer than this. The linear term is never
    /// stiff: its damping symbol is bounded by nu/alpha^2, so an explicit
    /// step is limited only by the advective CFL condition and accuracy.
    double dt = 1.0;
    double t_end = 1.0;
    std::vector<double> sample_times;    // strictly increasing, in (0, t_end]
    std::vector<double> snapshot_times;  // times where full spectra are retained
    bool nonlinearity = true;
    double cfl_safety = 0.5;  // advective CFL: dt <= safety * dx / max|u|
    int max_cfl_halvings = 40;

    SolverConfig(const Grid& g, const PhysicsParams& p) : grid(g), params(p) {}
};

/// Sample schedule used by the decay runs: uniform spacing dt0 early, then
/// multiplicative spacing growth*t (log-uniform), capped at max_gap. The
/// defaults keep the central-difference energy-balance residual of the
/// desk-scale configurations below 1e-6 of the initial energy per unit time.
std::vector<double> default_sample_schedule(double t_end, double dt0 = 0.4,
                                            double growth = 0.01,
                                            double max_gap = 128.0);

enum class RunStatus { Complete, AbortedNonFinite };

struct TrajectoryRecord {
    NormSeries series;  // sampled at t = 0 and every sample/snapshot knot
    std::vector<double> max_divergence;    // per sample
    std::vector<double> l2_time_integral;  // cumulative trapezoid of l2_sq
    std::vector<double> energy_residual;   // per sample; 0 at the two ends
    std::vector<double> snapshot_times;
    std::vector<SpectralVectorField> snapshots;
    RunStatus status = RunStatus::Complete;
    int cfl_halvings = 0;
    double initial_h1alpha_sq = 0.0;
};

/// Projected spectrum of the quadratic term in divergence form:
/// F(div(u (x) u)) dealiased by the 2/3 rule and Leray-projected, which
/// subtracts the pressure gradient. Rejects inputs that are not
/// divergence-free. The result is exactly skew w.r.t. u: it produces no
/// H1_alpha energy beyond the viscous term.
NonlinearFlux nonlinear_flux(const SpectralVectorField& u);

/// One classical RK4 step of
///   du/dt = -(nu k^2 u + flux) / (1 + alpha^2 k^2)   per mode.
/// Hermitian symmetry is re-enforced on the result; divergence-freeness is
/// preserved. Throws NumericalError if the result is not finite.
SpectralVectorField rk4_step(const SpectralVectorField& u, double dt,
                             const SolverConfig& cfg);

/// Integrate from the (dealiased, projected) initial field to t_end,
/// recording norms, divergence, the running time integral of the L2 norm and
/// snapshots. CFL violations halve the step cap and are counted; a
/// non-finite state aborts the run, keeping everything recorded so far.
TrajectoryRecord run_simulation(const SolverConfig& cfg, const SpectralVectorField& u0);

/// Central-difference d/dt of h1alpha_sq plus 2 nu h1dot_sq, normalized by
/// the initial energy. Zero at the series ends. Needs >= 3 samples.
std::vector<double> energy_balance_residual(const NormSeries& series,
                                            const PhysicsParams& params);

/// Time horizon up to which the periodic box mimics whole-space decay:
/// (L / 2 pi)^2, when the shrinking energy-containing frequency ball falls
/// inside the first grid shell. Fit windows are capped here.
double max_trustworthy_time(const Grid& grid);

/// Per-mode frequency-shell bound on stored snapshots:
///   |uhat(k,t)|^2 <= C [ e(k,t)^2 |uhat0(k)|^2 + |k|^2 I(t)^2 ],
/// with e the Voigt factor and I(t) the accumulated integral of the L2 norm.
/// Coefficients are compared in continuum normalization. fit_lemma_constant
/// returns the smallest C that works over all stored (k, t).
struct LemmaBoundCheck {
    double c_fit = 0.0;
    double max_ratio = 0.0;  // max over (k,t) of lhs/rhs
    bool holds = false;
    std::size_t snapshots_checked = 0;
};
double fit_lemma_constant(const TrajectoryRecord& traj, const SpectralVectorField& u0,
                          const PhysicsParams& params);
LemmaBoundCheck check_lemma_bound(const TrajectoryRecord& traj,
                                  const SpectralVectorField& u0,
                                  const PhysicsParams& params, double c_fit);

}  // namespace nsv
