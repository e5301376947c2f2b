#ifndef PINCHLAB_EISENSTEIN_HPP
#define PINCHLAB_EISENSTEIN_HPP

#include <complex>

#include "pinchlab/zeta.hpp"

namespace pinchlab {

struct EisensteinValue {
    std::complex<double> value;
    long terms_used = 0;
    double tail_indicator = 0.0;  // |last word-length shell sum|
    WarningList warnings;
};

// Hyperbolic Eisenstein series attached to the pinching geodesic:
//   E_l(z, s) = sum over <sigma_l> \ Gamma of sin^s(theta(gamma z)),
// summed shell-by-shell in word length.  Three consecutive non-decreasing
// shells raise a ConvergenceWarning (the sum is kept; near Re s = delta
// the series degrades gracefully rather than silently).
EisensteinValue hyperbolic_eisenstein(const SurfaceSpec& spec, HPoint z,
                                      const SpectralPoint& p, int max_word_len,
                                      std::optional<double> delta_hint = {});

// Classical (cusp) Eisenstein series on a free model group whose first
// generator stabilizes the cusp:
//   E_a(z, s) = sum over Gamma_a \ Gamma of Im(scaling^{-1} gamma z)^s.
// The scaling matrix must conjugate the cusp generator to the unit
// translation.  Warns below Re s = 1.
EisensteinValue cusp_eisenstein(const std::vector<Isometry>& generators,
                                const Isometry& scaling, HPoint z, const SpectralPoint& p,
                                int max_word_len);

// l^{-s} E_l(z, s) with l the pinching length.
EisensteinValue weighted_eisenstein(const SurfaceSpec& spec, HPoint z, const SpectralPoint& p,
                                    const Budgets& budgets);

// E*_l(z, s) = (Z_l(s)/z_l(s)) l^{-s} E_l(z, s): the regularized family
// whose pinching limit the experiments probe.
EisensteinValue starred_eisenstein(const SurfaceSpec& spec, HPoint z, const SpectralPoint& p,
                                   const Budgets& budgets);

}  // namespace pinchlab

#endif
