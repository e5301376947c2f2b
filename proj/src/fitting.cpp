#include "pinchlab/fitting.hpp"

#include <cmath>

namespace pinchlab {

FitReport fit_power_law(std::vector<FitSample> samples,
                        std::optional<std::complex<double>> target_alpha,
                        double residual_bound) {
    if (samples.size() < 4) throw FitError("fit_power_law: need at least 4 samples");

    const std::size_t n = samples.size();
    std::vector<double> xs(n);
    std::vector<std::complex<double>> ys(n);
    double prev_arg = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& smp = samples[i];
        if (!(smp.l > 0.0)) throw FitError("fit_power_law: grid values must be positive");
        const double mag = std::abs(smp.value);
        if (!(mag > 0.0) || !std::isfinite(mag))
            throw FitError("fit_power_law: zero or non-finite sample value");
        xs[i] = std::log(smp.l);
        double arg = std::arg(smp.value);
        if (i > 0) {
            // unwind: keep |arg_i - arg_{i-1}| minimal over 2 pi shifts
            const double twopi = 2.0 * 3.14159265358979323846;
            const double k = std::round((prev_arg - arg) / twopi);
            arg += twopi * k;
        }
        prev_arg = arg;
        ys[i] = std::complex<double>(std::log(mag), arg);
    }

    double xm = 0.0;
    std::complex<double> ym = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        xm += xs[i];
        ym += ys[i];
    }
    xm /= static_cast<double>(n);
    ym /= static_cast<double>(n);

    double sxx = 0.0;
    std::complex<double> sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - xm) * (xs[i] - xm);
        sxy += (xs[i] - xm) * (ys[i] - ym);
    }
    if (!(sxx > 0.0)) throw FitError("fit_power_law: degenerate grid (all l equal)");

    FitReport rep;
    rep.alpha = sxy / sxx;
    rep.log_c = ym - rep.alpha * xm;

    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::complex<double> r = ys[i] - (rep.log_c + rep.alpha * xs[i]);
        ssr += std::norm(r);
    }
    rep.residual = std::sqrt(ssr / static_cast<double>(n));
    rep.target_alpha = target_alpha;
    rep.samples = std::move(samples);
    if (rep.residual > residual_bound)
        throw FitError("fit_power_law: residual " + std::to_string(rep.residual) +
                       " exceeds bound " + std::to_string(residual_bound));
    return rep;
}

double cauchy_diagnostic(std::span<const FitSample> values_by_l) {
    if (values_by_l.size() < 3)
        throw DomainError("cauchy_diagnostic: need at least 3 samples");
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < values_by_l.size(); ++i)
        worst = std::max(worst, std::abs(values_by_l[i + 1].value - values_by_l[i].value));
    return worst;
}

}  // namespace pinchlab
