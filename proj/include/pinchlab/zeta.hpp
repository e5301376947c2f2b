#ifndef PINCHLAB_ZETA_HPP
#define PINCHLAB_ZETA_HPP

#include <complex>
#include <optional>
#include <span>

#include "pinchlab/fitting.hpp"
#include "pinchlab/surface.hpp"

namespace pinchlab {

// Evaluation point s with truncation controls.  trunc_k is the floor on
// the number of local-product factors; the tail rule extends past it until
// the remainder bound drops below tail_tol.
struct SpectralPoint {
    std::complex<double> s;
    int trunc_k = 1;
    double tail_tol = 1e-12;

    void validate() const;  // Re s > 0, trunc_k >= 1, tail_tol > 0
};

// Shared evaluation budgets for series/product assembly.
struct Budgets {
    int max_word_len = 10;
    double max_length = kNoLengthCutoff;
    int trunc_k = 1;
    double tail_tol = 1e-12;
    // Exponent-of-convergence estimate for the conditional-regime warning;
    // computed on demand when absent.
    std::optional<double> delta_hint;
};

inline constexpr double kDeltaMargin = 0.05;
inline constexpr const char* kConvergenceWarning =
    "ConvergenceWarning: Re s within margin of the convergence exponent; "
    "value is conditional";

struct ZetaValue {
    std::complex<double> log_value;
    double tail_bound = 0.0;  // heuristic, from the delta counting fit
    int classes_used = 0;
    double length_cutoff = 0.0;
    WarningList warnings;
};

// log z(l_c, s) for the local factor z(l_c,s) = prod_k (1-e^{-(s+k)l_c})^2,
// truncated once the remainder bound 2 sum_{k>K} |w_k|/(1-|w_k|) falls
// below tail_tol.  DomainError unless Re s > 0 and l_c > 0.
std::complex<double> local_factor_log(double l_c, const SpectralPoint& p);

// log of the truncated Selberg zeta product over the enumerated primitive
// classes.  A precomputed spectrum (enumerated with the same budgets) may
// be passed to avoid re-enumeration; it must be primitive classes sorted
// by length.  delta_hint supplies the convergence-exponent estimate.
ZetaValue selberg_zeta_log(const SurfaceSpec& spec, const SpectralPoint& p, int max_word_len,
                           double max_length = kNoLengthCutoff,
                           const std::vector<ConjClass>* spectrum = nullptr,
                           std::optional<double> delta_hint = {});

// log(Z_l(s)/z_l(s)): the zeta product with the pinching-geodesic factor
// removed.
ZetaValue weighted_quotient_log(const SurfaceSpec& spec, const SpectralPoint& p,
                                int max_word_len, double max_length = kNoLengthCutoff,
                                const std::vector<ConjClass>* spectrum = nullptr,
                                std::optional<double> delta_hint = {});

// Measured asymptotic exponent of z_l(1-s)/z_l(s) as l -> 0, to compare
// against 4s-2.  Real s in (0, 1/2]; grid decreasing inside (1e-4, 0.5).
FitReport z_ratio_exponent(double s, std::span<const double> l_grid,
                           double tail_tol = 1e-13, double residual_bound = 1e-2);

}  // namespace pinchlab

#endif
