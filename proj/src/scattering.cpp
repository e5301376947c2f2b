#include "pinchlab/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "pinchlab/io.hpp"
#include "pinchlab/special_functions.hpp"

namespace pinchlab {

namespace {

constexpr double kPoleScreenTol = 1e-12;
constexpr double kPi = 3.14159265358979323846264338327950288;

struct GammaArgs {
    // numerator: 0..2, denominator: 3..5
    std::complex<double> arg[6];
    static constexpr const char* kName[6] = {
        "Gamma(1/2-s)",          "Gamma((s+1+kbar)/2)",  "Gamma((s+1-kbar)/2)",
        "Gamma(s-1/2)",          "Gamma((2-s+kbar)/2)",  "Gamma((2-s-kbar)/2)"};
};

GammaArgs mode_args(std::complex<double> s, std::complex<double> kbar) {
    GammaArgs g;
    g.arg[0] = 0.5 - s;
    g.arg[1] = (s + 1.0 + kbar) / 2.0;
    g.arg[2] = (s + 1.0 - kbar) / 2.0;
    g.arg[3] = s - 0.5;
    g.arg[4] = (2.0 - s + kbar) / 2.0;
    g.arg[5] = (2.0 - s - kbar) / 2.0;
    return g;
}

std::complex<double> gamma_k_unchecked(std::complex<double> s, std::complex<double> kbar) {
    const GammaArgs g = mode_args(s, kbar);
    std::complex<double> acc = 0.0;
    for (int i = 0; i < 3; ++i) acc += log_gamma(g.arg[i]);
    for (int i = 3; i < 6; ++i) acc -= log_gamma(g.arg[i]);
    return std::exp(acc);
}

}  // namespace

std::complex<double> ScatteringMode::kbar() const {
    validate();
    return std::complex<double>(0.0, 2.0 * kPi * static_cast<double>(k) / l);
}

void ScatteringMode::validate() const {
    if (!(l > 0.0)) throw DomainError("ScatteringMode: funnel length must be positive");
}

std::complex<double> gamma_k(const ScatteringMode& mode, std::complex<double> s,
                             WarningList* warnings) {
    const std::complex<double> kb = mode.kbar();
    const GammaArgs g = mode_args(s, kb);
    int num_pole = -1, den_pole = -1;
    for (int i = 0; i < 6; ++i) {
        if (near_nonpositive_integer(g.arg[i], kPoleScreenTol)) {
            (i < 3 ? num_pole : den_pole) = i;
        }
    }
    if (num_pole >= 0 && den_pole >= 0) {
        // Removable line: poles cancel in the ratio.  Evaluate by the
        // two-sided perturbation average.
        if (warnings)
            warnings->push_back(std::string("removable pole at ") + GammaArgs::kName[num_pole] +
                                " / " + GammaArgs::kName[den_pole] +
                                "; evaluated by s +- 1e-6 average");
        const std::complex<double> eps(1e-6, 0.0);
        return 0.5 * (gamma_k_unchecked(s + eps, kb) + gamma_k_unchecked(s - eps, kb));
    }
    if (num_pole >= 0)
        throw PoleError(std::string("gamma_k: pole of ") + GammaArgs::kName[num_pole]);
    if (den_pole >= 0)
        throw PoleError(std::string("gamma_k: pole of ") + GammaArgs::kName[den_pole] +
                        " (gamma_k vanishes there)");
    return gamma_k_unchecked(s, kb);
}

std::complex<double> stirling_gamma_mode(int k, std::complex<double> s, double l) {
    if (k == 0) throw DomainError("stirling_gamma_mode: needs k != 0");
    const double kappa_half = kPi * std::abs(static_cast<double>(k)) / l;
    return std::exp(log_gamma(0.5 - s) - log_gamma(s - 0.5) +
                    (2.0 * s - 1.0) * std::log(kappa_half));
}

ModeDegenerationReport gamma_k_degeneration(int k, std::complex<double> s,
                                            std::span<const double> l_grid,
                                            double residual_bound) {
    if (k == 0) throw DomainError("gamma_k_degeneration: k must be nonzero");
    if (!(s.real() > 0.5)) throw DomainError("gamma_k_degeneration: requires Re s > 1/2");
    for (std::size_t i = 1; i < l_grid.size(); ++i)
        if (!(l_grid[i] < l_grid[i - 1]))
            throw DomainError("gamma_k_degeneration: l grid must be strictly decreasing");

    ModeDegenerationReport rep;
    std::vector<FitSample> samples;
    for (double l : l_grid) {
        const std::complex<double> v = gamma_k(ScatteringMode{k, l}, s);
        rep.rows.push_back({l, std::abs(v), std::abs(stirling_gamma_mode(k, s, l))});
        samples.push_back({l, v});
    }
    try {
        rep.fit = fit_power_law(std::move(samples), 1.0 - 2.0 * s, residual_bound);
    } catch (const FitError& e) {
        throw FitError(std::string("gamma_k_degeneration: ") + e.what());
    }
    return rep;
}

std::complex<double> tau_limit_target(std::complex<double> s) {
    // Poles where sin(pi s / 2) = 0: even integers.
    const double re2 = s.real() / 2.0, im2 = s.imag() / 2.0;
    if (std::abs(im2) <= kPoleScreenTol && std::abs(re2 - std::round(re2)) <= kPoleScreenTol)
        throw PoleError("tau_limit_target: pole at even integer s = " +
                        std::to_string(s.real()));
    const std::complex<double> sn = std::sin(kPi * s / 2.0);
    return 1.0 / (2.0 * sn * sn);
}

RelDetValue rel_det_partial(std::vector<std::complex<double>> eigen_increments, std::size_t cap,
                            std::optional<double> supplied_tail) {
    // Sorted accumulation: the value is bit-identical under permutation of
    // the supplied list.
    std::vector<std::complex<double>> lams(
        eigen_increments.begin(),
        eigen_increments.begin() +
            static_cast<std::ptrdiff_t>(std::min(cap, eigen_increments.size())));
    std::sort(lams.begin(), lams.end(), [](const auto& x, const auto& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });

    RelDetValue out;
    std::complex<double> acc = 0.0;
    for (const auto& lam : lams) {
        if (std::abs(1.0 + lam) < 1e-14)
            throw DomainError("rel_det_partial: factor 1 + lambda vanishes");
        acc += std::abs(lam) < 0.5 ? log1p_complex(lam) : std::log(1.0 + lam);
    }
    out.value = std::exp(acc);
    double rem = supplied_tail.value_or(0.0);
    for (std::size_t i = cap; i < eigen_increments.size(); ++i)
        rem += std::abs(eigen_increments[i]);
    out.truncation_remainder = rem;
    return out;
}

void write_mode_table_csv(std::ostream& os, const std::vector<ModeTableRow>& rows) {
    os << "k,l,s_re,s_im,gamma_re,gamma_im,abs_gamma\n";
    for (const auto& r : rows)
        os << r.k << ',' << format_sig17(r.l) << ',' << format_sig17(r.s.real()) << ','
           << format_sig17(r.s.imag()) << ',' << format_sig17(r.gamma.real()) << ','
           << format_sig17(r.gamma.imag()) << ',' << format_sig17(std::abs(r.gamma)) << '\n';
}

}  // namespace pinchlab
