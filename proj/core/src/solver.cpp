#include "nsvlab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "nsvlab/errors.hpp"
#include "nsvlab/transforms.hpp"

namespace nsv {

std::vector<double> default_sample_schedule(double t_end, double dt0, double growth,
                                            double max_gap) {
  if (!(t_end > 0.0) || !(dt0 > 0.0) || !(growth > 0.0))
    throw ValidationError("default_sample_schedule: bad parameters");
  std::vector<double> out;
  double t = 0.0;
  while (t < t_end) {
    const double gap = std::min(std::max(dt0, growth * t), max_gap);
    t += gap;
    if (t >= t_end * (1.0 - 1e-12)) break;
    out.push_back(t);
  }
  out.push_back(t_end);
  return out;
}

namespace {

constexpr double kDivergenceInputTol = 1e-8;

struct FluxResult {
    NonlinearFlux flux;
    double umax;
};

FluxResult flux_with_umax(const SpectralVectorField& u) {
  const Grid& g = u.grid();
  FluxResult out{NonlinearFlux(g), 0.0};

  PhysicalVectorField phys = to_physical(u);
  double umax = 0.0;
  const std::size_t total = static_cast<std::size_t>(g.total_points());
  for (std::size_t p = 0; p < total; ++p) {
    const double sq = phys.values[0][p] * phys.values[0][p] +
                      phys.values[1][p] * phys.values[1][p] +
                      phys.values[2][p] * phys.values[2][p];
    umax = std::max(umax, sq);
  }
  out.umax = std::sqrt(umax);

  // Six distinct entries of the symmetric tensor u (x) u.
  static constexpr int kPairs[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
  std::array<std::vector<Complex>, 6> w;
  std::vector<double> prod(total);
  for (int m = 0; m < 6; ++m) {
    const auto& a = phys.values[kPairs[m][0]];
    const auto& b = phys.values[kPairs[m][1]];
    for (std::size_t p = 0; p < total; ++p) prod[p] = a[p] * b[p];
    forward_scalar(g, prod, w[m]);
  }

  // G_c(k) = i sum_j k_j W_{cj}(k), the divergence-form convective spectrum.
  SpectralVectorField& flux = out.flux.spectrum;
  const int n = g.points_per_dim();
  const Complex iunit{0.0, 1.0};
  for (int i = 0; i < n; ++i) {
    const double kx = g.wavenumber(i);
    for (int j = 0; j < n; ++j) {
      const double ky = g.wavenumber(j);
      for (int l = 0; l < n; ++l) {
        const double kz = g.wavenumber(l);
        const std::int64_t idx = g.flat_index(i, j, l);
        flux.at(0, idx) = iunit * (kx * w[0][idx] + ky * w[1][idx] + kz * w[2][idx]);
        flux.at(1, idx) = iunit * (kx * w[1][idx] + ky * w[3][idx] + kz * w[4][idx]);
        flux.at(2, idx) = iunit * (kx * w[2][idx] + ky * w[4][idx] + kz * w[5][idx]);
      }
    }
  }

  dealias_inplace(flux);
  leray_project_inplace(flux);
  symmetrize_hermitian(flux);
  return out;
}

// du/dt = -(nu k^2 u + flux) * (1 + alpha^2 k^2)^-1, written into `out`.
void eval_rhs(const SpectralVectorField& u, const SolverConfig& cfg,
              SpectralVectorField& out, double* umax_seen) {
  const Grid& g = u.grid();
  const int n = g.points_per_dim();
  const PhysicsParams& p = cfg.params;

  const SpectralVectorField* flux = nullptr;
  FluxResult fr{NonlinearFlux(g), 0.0};
  if (cfg.nonlinearity) {
    fr = flux_with_umax(u);
    flux = &fr.flux.spectrum;
    if (umax_seen) *umax_seen = fr.umax;
  } else if (umax_seen) {
    *umax_seen = 0.0;
  }

  for (int i = 0; i < n; ++i) {
    const double kx = g.wavenumber(i);
    for (int j = 0; j < n; ++j) {
      const double ky = g.wavenumber(j);
      for (int l = 0; l < n; ++l) {
        const double kz = g.wavenumber(l);
        const double k2 = kx * kx + ky * ky + kz * kz;
        const double inv = 1.0 / (1.0 + p.alpha * p.alpha * k2);
        const double damp = p.nu * k2 * inv;
        const std::int64_t idx = g.flat_index(i, j, l);
        for (int c = 0; c < 3; ++c) {
          Complex rhs = -damp * u.at(c, idx);
          if (flux) rhs -= inv * flux->at(c, idx);
          out.at(c, idx) = rhs;
        }
      }
    }
  }
}

double field_max_abs(const SpectralVectorField& f) {
  double m = 0.0;
  for (int c = 0; c < 3; ++c)
    for (const Complex& v : f.component(c))
      m = std::max(m, std::max(std::abs(v.real()), std::abs(v.imag())));
  return m;
}

}  // namespace

NonlinearFlux nonlinear_flux(const SpectralVectorField& u) {
  if (max_relative_divergence(u) > kDivergenceInputTol)
    throw ValidationError("nonlinear_flux: input field is not divergence-free");
  return std::move(flux_with_umax(u).flux);
}

SpectralVectorField rk4_step(const SpectralVectorField& u, double dt,
                             const SolverConfig& cfg) {
  const Grid& g = u.grid();
  SpectralVectorField k(g), stage(g), acc(g);

  eval_rhs(u, cfg, k, nullptr);  // k1
  acc = u;
  acc.axpy(dt / 6.0, k);
  stage = u;
  stage.axpy(0.5 * dt, k);

  eval_rhs(stage, cfg, k, nullptr);  // k2
  acc.axpy(dt / 3.0, k);
  stage = u;
  stage.axpy(0.5 * dt, k);

  eval_rhs(stage, cfg, k, nullptr);  // k3
  acc.axpy(dt / 3.0, k);
  stage = u;
  stage.axpy(dt, k);

  eval_rhs(stage, cfg, k, nullptr);  // k4
  acc.axpy(dt / 6.0, k);

  symmetrize_hermitian(acc);
  if (!std::isfinite(field_max_abs(acc)))
    throw NumericalError("rk4_step: state is no longer finite");
  return acc;
}

TrajectoryRecord run_simulation(const SolverConfig& cfg, const SpectralVectorField& u0) {
  cfg.params.validate();
  if (!(u0.grid() == cfg.grid))
    throw StructuralError("run_simulation: datum grid does not match config grid");
  if (!(cfg.t_end > 0.0)) throw ValidationError("run_simulation: t_end must be > 0");
  if (!(cfg.dt > 0.0)) throw ValidationError("run_simulation: dt must be > 0");

  // Canonicalize the state: retained modes only, divergence-free, Hermitian.
  SpectralVectorField u = u0;
  dealias_inplace(u);
  symmetrize_hermitian(u);
  leray_project_inplace(u);

  // Knot times: samples, snapshots and t_end, merged and deduplicated.
  std::vector<double> knots = cfg.sample_times;
  knots.insert(knots.end(), cfg.snapshot_times.begin(), cfg.snapshot_times.end());
  knots.push_back(cfg.t_end);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end(),
                          [&](double a, double b) {
                            return std::abs(a - b) <= 1e-12 * cfg.t_end;
                          }),
              knots.end());
  if (knots.front() <= 0.0)
    throw ValidationError("run_simulation: sample times must be positive");
  if (knots.back() > cfg.t_end * (1.0 + 1e-12))
    throw ValidationError("run_simulation: sample times beyond t_end");

  auto wants_snapshot = [&](double t) {
    for (double s : cfg.snapshot_times)
      if (std::abs(s - t) <= 1e-12 * cfg.t_end) return true;
    return false;
  };

  TrajectoryRecord rec;
  const PhysicsParams& p = cfg.params;

  auto record_sample = [&](double t, const SpectralVectorField& field) {
    const NormTriple norms = h1alpha_norm_sq(field, p);
    double integral = 0.0;
    if (!rec.series.times.empty()) {
      const double t_prev = rec.series.times.back();
      const double l2_prev = rec.series.l2_sq.back();
      integral = rec.l2_time_integral.back() +
                 0.5 * (l2_prev + norms.l2_sq) * (t - t_prev);
    }
    rec.series.push_values(t, norms.l2_sq, norms.h1dot_sq, norms.h1alpha_sq);
    rec.l2_time_integral.push_back(integral);
    rec.max_divergence.push_back(max_relative_divergence(field));
    if (wants_snapshot(t) || t == 0.0) {
      rec.snapshot_times.push_back(t);
      rec.snapshots.push_back(field);
    }
  };

  record_sample(0.0, u);
  rec.initial_h1alpha_sq = rec.series.h1alpha_sq.front();

  double dt_cap = cfg.dt;
  const double dx = cfg.grid.dx();
  double t = 0.0;

  try {
    for (double knot : knots) {
      double remaining = knot - t;
      while (remaining > 1e-12 * cfg.t_end) {
        int substeps = static_cast<int>(std::ceil(remaining / dt_cap - 1e-12));
        substeps = std::max(substeps, 1);
        double dt_step = remaining / substeps;

        // Advective CFL on the current state; the check is cheap relative to
        // a step and only matters for nonlinear runs.
        if (cfg.nonlinearity) {
          const double umax = flux_with_umax(u).umax;
          while (umax > 0.0 && dt_step > cfg.cfl_safety * dx / umax) {
            if (rec.cfl_halvings >= cfg.max_cfl_halvings)
              throw NumericalError("run_simulation: CFL halving limit reached");
            dt_cap = 0.5 * std::min(dt_cap, dt_step);
            ++rec.cfl_halvings;
            std::cerr << "[nsvlab] CFL violation at t=" << t
                      << ": halving step cap to " << dt_cap << "\n";
            substeps = static_cast<int>(std::ceil(remaining / dt_cap - 1e-12));
            dt_step = remaining / substeps;
          }
        }

        u = rk4_step(u, dt_step, cfg);
        t += dt_step;
        remaining = knot - t;
      }
      t = knot;
      record_sample(t, u);
    }
  } catch (const NumericalError&) {
    rec.status = RunStatus::AbortedNonFinite;
  }

  rec.energy_residual = energy_balance_residual(rec.series, p);
  return rec;
}

std::vector<double> energy_balance_residual(const NormSeries& series,
                                            const PhysicsParams& params) {
  const std::size_t n = series.size();
  if (n < 3)
    throw ValidationError("energy_balance_residual: need at least 3 samples");
  std::vector<double> out(n, 0.0);
  const double e0 = series.h1alpha_sq.front();
  if (e0 <= 0.0) return out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = series.times[i] - series.times[i - 1];
    const double hp = series.times[i + 1] - series.times[i];
    const double fm = series.h1alpha_sq[i - 1];
    const double f0 = series.h1alpha_sq[i];
    const double fp = series.h1alpha_sq[i + 1];
    // Second-order nonuniform central difference.
    const double deriv =
        (fp * hm * hm - fm * hp * hp + f0 * (hp * hp - hm * hm)) /
        (hp * hm * (hp + hm));
    out[i] = std::abs(deriv + 2.0 * params.nu * series.h1dot_sq[i]) / e0;
  }
  return out;
}

double max_trustworthy_time(const Grid& grid) {
  const double ratio = grid.box_length() / kTwoPi;
  return ratio * ratio;
}

namespace {

double lemma_max_ratio(const TrajectoryRecord& traj, const SpectralVectorField& u0_raw,
                       const PhysicsParams& params) {
  if (traj.snapshots.empty())
    throw StructuralError("lemma bound: trajectory has no stored snapshots");
  SpectralVectorField u0 = u0_raw;
  dealias_inplace(u0);
  symmetrize_hermitian(u0);
  leray_project_inplace(u0);

  const Grid& g = u0.grid();
  const int n = g.points_per_dim();
  // |uhat|^2 in continuum normalization carries L^6 / (2 pi)^3.
  const double conv = std::pow(g.box_length(), 6) / std::pow(kTwoPi, 3);

  double max_ratio = 0.0;
  for (std::size_t snap = 0; snap < traj.snapshots.size(); ++snap) {
    const double t = traj.snapshot_times[snap];
    // Locate the matching sample for the accumulated L2 integral.
    double integral = -1.0;
    for (std::size_t i = 0; i < traj.series.times.size(); ++i) {
      if (std::abs(traj.series.times[i] - t) <= 1e-9 * (1.0 + t)) {
        integral = traj.l2_time_integral[i];
        break;
      }
    }
    if (integral < 0.0)
      throw StructuralError("lemma bound: snapshot time missing from sample series");

    const SpectralVectorField& ut = traj.snapshots[snap];
    for (int i = 0; i < n; ++i) {
      const double kx = g.wavenumber(i);
      for (int j = 0; j < n; ++j) {
        const double ky = g.wavenumber(j);
        for (int l = 0; l < n; ++l) {
          const double kz = g.wavenumber(l);
          const double k2 = kx * kx + ky * ky + kz * kz;
          if (k2 == 0.0) continue;
          const std::int64_t idx = g.flat_index(i, j, l);
          const double lhs = conv * (std::norm(ut.at(0, idx)) + std::norm(ut.at(1, idx)) +
                                     std::norm(ut.at(2, idx)));
          if (lhs == 0.0) continue;
          const double mult = voigt_multiplier(std::sqrt(k2), params, t);
          const double u0sq = std::norm(u0.at(0, idx)) + std::norm(u0.at(1, idx)) +
                              std::norm(u0.at(2, idx));
          const double rhs = conv * mult * mult * u0sq + k2 * integral * integral;
          if (rhs == 0.0) return std::numeric_limits<double>::infinity();
          max_ratio = std::max(max_ratio, lhs / rhs);
        }
      }
    }
  }
  return max_ratio;
}

}  // namespace

double fit_lemma_constant(const TrajectoryRecord& traj, const SpectralVectorField& u0,
                          const PhysicsParams& params) {
  return lemma_max_ratio(traj, u0, params);
}

LemmaBoundCheck check_lemma_bound(const TrajectoryRecord& traj,
                                  const SpectralVectorField& u0,
                                  const PhysicsParams& params, double c_fit) {
  LemmaBoundCheck out;
  out.c_fit = c_fit;
  out.max_ratio = lemma_max_ratio(traj, u0, params);
  out.holds = std::isfinite(out.max_ratio) && out.max_ratio <= c_fit * (1.0 + 1e-12);
  out.snapshots_checked = traj.snapshots.size();
  return out;
}

}  // namespace nsv
