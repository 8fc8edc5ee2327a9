#pragma once

#include <cstddef>
#include <vector>

namespace nsv {

/// Sampled evolution of the squared norms of a field. Raw values and natural
/// logs are both carried: the continuum path can produce values far below the
/// double underflow threshold (deep exponential decay), where only the log
/// columns stay meaningful.
struct NormSeries {
    std::vector<double> times;
    std::vector<double> l2_sq;
    std::vector<double> h1dot_sq;
    std::vector<double> h1alpha_sq;
    std::vector<double> log_l2_sq;
    std::vector<double> log_h1dot_sq;
    std::vector<double> log_h1alpha_sq;

    std::size_t size() const { return times.size(); }
    void push_values(double t, double l2, double h1dot, double h1alpha);
    void push_logs(double t, double log_l2, double log_h1dot, double log_h1alpha);
    void validate() const;  // strictly increasing times, matching lengths
};

enum class NormComponent { L2, H1Dot, H1Alpha };

const std::vector<double>& log_column(const NormSeries& s, NormComponent c);

/// Result of fitting y ~ A (B + t)^(-p) in log-log coordinates.
struct DecayFitResult {
    double exponent = 0.0;   // p
    double amplitude = 0.0;  // A
    double offset = 0.0;     // B >= 0
    double t0 = 0.0;         // fit window actually used
    double t1 = 0.0;
    double rms_residual = 0.0;  // in log coordinates
    std::size_t n_samples = 0;

    /// Residual threshold above which the series is flagged as not algebraic.
    static constexpr double kNonAlgebraicResidual = 0.1;
    bool algebraic() const { return rms_residual <= kNonAlgebraicResidual; }
};

/// Least-squares fit of A (B + t)^(-p) to the chosen squared-norm column over
/// [window_t0, window_t1]. B is fitted (constrained >= 0) by a bracketed 1D
/// search; for each B the remaining parameters are linear. Requires >= 8
/// samples in the window, all positive (finite logs).
DecayFitResult fit_decay_exponent(const NormSeries& series, NormComponent component,
                                  double window_t0, double window_t1);

/// Same fit on raw (t, log y) arrays.
DecayFitResult fit_decay_exponent(const std::vector<double>& times,
                                  const std::vector<double>& log_values,
                                  double window_t0, double window_t1);

/// Plain least-squares slope of y against x; used for log-log slope fits
/// where no offset is wanted (e.g. mass vs radius near the origin).
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms_residual = 0.0;
    std::size_t n_samples = 0;
};
SlopeFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Per-decade log-log slopes of -d(log y)/d(log t): one least-squares slope
/// per decade of t inside the window. Classifies the faster/slower-than-
/// algebraic regimes, where a single fitted exponent is meaningless.
struct DecadeSlopes {
    std::vector<double> decade_start;  // left edge of each decade
    std::vector<double> slope;         // decay exponent observed in that decade
};
DecadeSlopes per_decade_slopes(const std::vector<double>& times,
                               const std::vector<double>& log_values, double t0,
                               double t1);

std::vector<double> log_spaced_times(double t0, double t1, int per_decade);

}  // namespace nsv
