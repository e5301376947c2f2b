#ifndef PINCHLAB_SCATTERING_HPP
#define PINCHLAB_SCATTERING_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "pinchlab/fitting.hpp"

namespace pinchlab {

// Fourier mode of the funnel boundary circle of length l.
struct ScatteringMode {
    int k = 0;
    double l = 1.0;

    // kbar = 2 pi i k / l, purely imaginary.
    std::complex<double> kbar() const;
    void validate() const;  // l > 0
};

// Funnel scattering eigenvalue on mode k:
//
//   gamma_k(s) = G(1/2-s) G((s+1+kbar)/2) G((s+1-kbar)/2)
//              / G(s-1/2) G((2-s+kbar)/2) G((2-s-kbar)/2)
//
// evaluated through log-Gamma.  All six arguments are pre-screened for
// poles (tolerance 1e-12); a simultaneous numerator/denominator pole is a
// removable line and is evaluated as the average of s +- 1e-6 with a
// warning; a one-sided pole is a PoleError naming the argument.
std::complex<double> gamma_k(const ScatteringMode& mode, std::complex<double> s,
                             WarningList* warnings = nullptr);

// Large-|kbar| asymptotic of gamma_k (Stirling on the four k-dependent
// Gammas; the 1/kbar corrections cancel):
//   gamma_k(s) ~ (G(1/2-s)/G(s-1/2)) (pi |k| / l)^{2s-1},  l -> 0.
std::complex<double> stirling_gamma_mode(int k, std::complex<double> s, double l);

struct ModeDegenerationRow {
    double l = 0.0;
    double measured_abs = 0.0;
    double oracle_abs = 0.0;  // Stirling reference
};

struct ModeDegenerationReport {
    FitReport fit;  // |gamma_k| against l, target exponent 1-2s
    std::vector<ModeDegenerationRow> rows;
};

// Tabulates gamma_k(s) along a decreasing l grid and reports the measured
// trend against the Stirling reference; nothing is asserted about the
// limit, the report records measured vs oracle.  Requires k != 0 and
// Re s > 1/2.
ModeDegenerationReport gamma_k_degeneration(int k, std::complex<double> s,
                                            std::span<const double> l_grid,
                                            double residual_bound = 0.5);

// The pinching limit of the relative scattering determinant claimed for
// Re s > 1/2: 1 / (2 sin^2(pi s / 2)).  PoleError at even integers.
std::complex<double> tau_limit_target(std::complex<double> s);

struct RelDetValue {
    std::complex<double> value;
    double truncation_remainder = 0.0;  // sum of |lambda_k| beyond the cap (+ supplied tail)
};

// Truncated Fredholm determinant prod_{k<=cap} (1 + lambda_k) from
// externally supplied eigen-increments of S_rel - I, accumulated in log
// space over a sorted copy (bit-deterministic under permutation of the
// input).  DomainError if any 1 + lambda_k vanishes within 1e-14.
RelDetValue rel_det_partial(std::vector<std::complex<double>> eigen_increments,
                            std::size_t cap,
                            std::optional<double> supplied_tail = {});

// CSV mode table: k,l,s_re,s_im,gamma_re,gamma_im,abs_gamma.
struct ModeTableRow {
    int k;
    double l;
    std::complex<double> s;
    std::complex<double> gamma;
};
void write_mode_table_csv(std::ostream& os, const std::vector<ModeTableRow>& rows);

}  // namespace pinchlab

#endif
