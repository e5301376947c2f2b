#include "pinchlab/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "pinchlab/special_functions.hpp"

namespace pinchlab {

void SpectralPoint::validate() const {
    if (!(s.real() > 0.0))
        throw DomainError("SpectralPoint: requires Re s > 0, got " + std::to_string(s.real()));
    if (trunc_k < 1) throw DomainError("SpectralPoint: trunc_k must be >= 1");
    if (!(tail_tol > 0.0)) throw DomainError("SpectralPoint: tail_tol must be positive");
}

std::complex<double> local_factor_log(double l_c, const SpectralPoint& p) {
    p.validate();
    if (!(l_c > 0.0)) throw DomainError("local_factor_log: geodesic length must be positive");

    const double sigma = p.s.real();
    // Remainder after k <= K: 2 sum_{k>K} |w_k|/(1-|w_k|) with |w_k| =
    // e^{-(sigma+k) l}.  Bounded by 2 u / ((1-e^{-l})(1-u)), u = e^{-(sigma+K+1)l}.
    const double em = -std::expm1(-l_c);  // 1 - e^{-l_c}
    const double target = std::log(2.0 / (p.tail_tol * em * 0.5));
    int K = std::max(p.trunc_k, static_cast<int>(std::ceil(target / l_c - sigma)) + 1);

    std::complex<double> acc = 0.0;
    const std::complex<double> w0 = std::exp(-p.s * l_c);
    const double r = std::exp(-l_c);
    std::complex<double> w = w0;
    for (int k = 0; k <= K; ++k) {
        if (std::abs(w) < 1e-18 && k >= p.trunc_k) break;  // below double resolution of the sum
        acc += log1p_complex(-w);
        w *= r;
        if ((k & 1023) == 1023) w = w0 * std::exp(-static_cast<double>(k + 1) * l_c);  // kill drift
    }
    return 2.0 * acc;
}

namespace {

double heuristic_tail(double sigma, double delta, double cutoff_length) {
    // Missing mass from the counting fit N(T) ~ e^{dT}/(dT): each class
    // beyond the cutoff contributes ~ -2 e^{-s l}; integrate the density.
    if (!(sigma > delta) || !(cutoff_length > 0.0))
        return std::numeric_limits<double>::infinity();
    const double gap = sigma - delta;
    return 2.0 * std::exp(-gap * cutoff_length) / (gap * cutoff_length);
}

}  // namespace

ZetaValue selberg_zeta_log(const SurfaceSpec& spec, const SpectralPoint& p, int max_word_len,
                           double max_length, const std::vector<ConjClass>* spectrum,
                           std::optional<double> delta_hint) {
    p.validate();

    std::vector<ConjClass> own;
    if (!spectrum) {
        own = enumerate_conj_classes(spec, max_word_len, max_length);
        std::erase_if(own, [](const ConjClass& c) { return !c.primitive; });
        spectrum = &own;
    }

    double delta;
    if (delta_hint) {
        delta = *delta_hint;
    } else if (spec.is_cylinder()) {
        delta = 0.0;
    } else {
        try {
            delta = estimate_delta(spec, max_word_len, max_length).value;
        } catch (const InsufficientDataError&) {
            delta = std::numeric_limits<double>::quiet_NaN();
        }
    }

    ZetaValue zv;
    zv.classes_used = static_cast<int>(spectrum->size());
    // Sequential reduction in spectrum order (length, then canonical word):
    // bit-deterministic regardless of any upstream parallelism.
    for (const auto& c : *spectrum) {
        zv.log_value += local_factor_log(c.length, p);
        zv.length_cutoff = std::max(zv.length_cutoff, c.length);
    }

    const double sigma = p.s.real();
    if (std::isnan(delta)) {
        zv.warnings.push_back("delta estimate unavailable at this budget; tail bound and "
                              "conditional-regime check skipped");
        zv.tail_bound = std::numeric_limits<double>::infinity();
    } else {
        if (sigma <= delta + kDeltaMargin) zv.warnings.push_back(kConvergenceWarning);
        // Completion cutoff: the shortest geodesic needing the full word
        // budget marks where the enumerated spectrum stops being complete.
        double cutoff = zv.length_cutoff;
        for (const auto& c : *spectrum)
            if (c.word_len() >= max_word_len) {
                cutoff = std::min(cutoff, c.length);
                break;
            }
        if (spectrum->empty()) cutoff = 0.0;
        zv.length_cutoff = cutoff;
        zv.tail_bound = spectrum->empty() ? std::numeric_limits<double>::infinity()
                                          : heuristic_tail(sigma, delta, cutoff);
    }
    return zv;
}

ZetaValue weighted_quotient_log(const SurfaceSpec& spec, const SpectralPoint& p,
                                int max_word_len, double max_length,
                                const std::vector<ConjClass>* spectrum,
                                std::optional<double> delta_hint) {
    ZetaValue zv = selberg_zeta_log(spec, p, max_word_len, max_length, spectrum, delta_hint);
    zv.log_value -= local_factor_log(spec.pinching_length(), p);
    return zv;
}

FitReport z_ratio_exponent(double s, std::span<const double> l_grid, double tail_tol,
                           double residual_bound) {
    if (!(s > 0.0) || !(s <= 0.5))
        throw DomainError("z_ratio_exponent: s must lie in (0, 1/2]");
    if (l_grid.size() < 6) throw DomainError("z_ratio_exponent: need at least 6 grid points");
    for (std::size_t i = 0; i < l_grid.size(); ++i) {
        if (!(l_grid[i] > 1e-4) || !(l_grid[i] < 0.5))
            throw DomainError("z_ratio_exponent: grid must lie inside (1e-4, 0.5)");
        if (i > 0 && !(l_grid[i] < l_grid[i - 1]))
            throw DomainError("z_ratio_exponent: grid must be strictly decreasing");
    }

    std::vector<FitSample> samples;
    samples.reserve(l_grid.size());
    for (double l : l_grid) {
        SpectralPoint ps{std::complex<double>(s, 0.0), 1, tail_tol};
        SpectralPoint pq{std::complex<double>(1.0 - s, 0.0), 1, tail_tol};
        const double ratio_log =
            local_factor_log(l, pq).real() - local_factor_log(l, ps).real();
        samples.push_back({l, std::exp(std::complex<double>(ratio_log, 0.0))});
    }
    return fit_power_law(std::move(samples), std::complex<double>(4.0 * s - 2.0, 0.0),
                         residual_bound);
}

}  // namespace pinchlab
