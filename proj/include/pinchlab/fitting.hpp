#ifndef PINCHLAB_FITTING_HPP
#define PINCHLAB_FITTING_HPP

#include <complex>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "pinchlab/errors.hpp"

namespace pinchlab {

struct FitSample {
    double l = 0.0;
    std::complex<double> value;
};

// Power-law fit report: log f(l) = log_c + alpha log l by complex least
// squares, with the phase of f unwound continuously along the grid.
struct FitReport {
    std::vector<FitSample> samples;
    std::complex<double> alpha;
    std::complex<double> log_c;
    double residual = 0.0;  // rms of the complex log-space residuals
    std::optional<std::complex<double>> target_alpha;
    WarningList warnings;
};

// Samples must have distinct positive l and nonzero values; at least 4 of
// them make a valid fit.  The imaginary part of log f is unwound by
// continuity in the order given (callers pass grids sorted by decreasing
// l), so adjacent phase jumps below pi never alias.  Throws FitError when
// the residual exceeds residual_bound or the samples are unusable.
FitReport fit_power_law(std::vector<FitSample> samples,
                        std::optional<std::complex<double>> target_alpha = {},
                        double residual_bound = std::numeric_limits<double>::infinity());

// Max over consecutive pairs of |f(l_{i+1}) - f(l_i)|: the Cauchy
// convergence indicator for a family sampled along a pinching grid.
// Needs at least 3 samples.
double cauchy_diagnostic(std::span<const FitSample> values_by_l);

}  // namespace pinchlab

#endif
