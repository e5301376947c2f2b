#include "pinchlab/eisenstein.hpp"

#include <cmath>

#include "pinchlab/special_functions.hpp"

namespace pinchlab {

namespace {

// Shell-by-shell coset sum.  term(matrix, z) evaluates one coset; the
// shells are reduced words of fixed length with first letter outside the
// stabilizer generator.  Deterministic: DFS in collation order, shells
// accumulated sequentially.
template <typename Term>
EisensteinValue shell_sum(const std::vector<Isometry>& gens, int stabilizer_gen, HPoint z,
                          int max_word_len, Term&& term) {
    if (!(z.y > 0.0)) throw DomainError("eisenstein: z must lie in the upper half-plane");

    EisensteinValue ev;
    ev.value = term(Isometry::identity(), z);  // identity coset, shell 0
    ev.terms_used = 1;
    ev.tail_indicator = std::abs(ev.value);

    const int rank = static_cast<int>(gens.size());
    std::vector<Isometry> letters(2 * rank);
    for (int g = 0; g < rank; ++g) {
        letters[2 * g] = gens[g];
        letters[2 * g + 1] = gens[g].inverse();
    }

    int stalls = 0;
    double prev_shell = ev.tail_indicator;
    std::vector<int> word;
    std::vector<Isometry> stack;
    for (int n = 1; n <= max_word_len; ++n) {
        std::complex<double> shell = 0.0;
        long shell_terms = 0;
        // iterative DFS to exact depth n
        word.assign(1, -1);
        stack.assign(1, Isometry::identity());
        while (!word.empty()) {
            int& r = word.back();
            ++r;
            if (r >= 2 * rank) {
                word.pop_back();
                stack.pop_back();
                continue;
            }
            const int depth = static_cast<int>(word.size());
            if (depth == 1 && r / 2 == stabilizer_gen - 1) continue;  // not a coset rep
            if (depth > 1) {
                const int prev = word[word.size() - 2];
                if ((prev ^ 1) == r) continue;  // inverse pair: not reduced
            }
            const Isometry m = stack.back() * letters[r];
            if (depth == n) {
                shell += term(m, z);
                ++shell_terms;
            } else {
                word.push_back(-1);
                stack.push_back(m);
            }
        }
        if (shell_terms == 0) break;  // rank-1 stabilizer group: no further cosets
        ev.value += shell;
        ev.terms_used += shell_terms;
        const double mag = std::abs(shell);
        ev.tail_indicator = mag;
        if (mag >= prev_shell) {
            if (++stalls >= 3) {
                ev.warnings.push_back(kConvergenceWarning);
                stalls = 0;
            }
        } else {
            stalls = 0;
        }
        prev_shell = mag;
    }
    return ev;
}

}  // namespace

EisensteinValue hyperbolic_eisenstein(const SurfaceSpec& spec, HPoint z, const SpectralPoint& p,
                                      int max_word_len, std::optional<double> delta_hint) {
    p.validate();

    double delta = std::numeric_limits<double>::quiet_NaN();
    if (delta_hint)
        delta = *delta_hint;
    else if (spec.is_cylinder())
        delta = 0.0;
    else {
        try {
            delta = estimate_delta(spec, std::min(max_word_len, 10)).value;
        } catch (const InsufficientDataError&) {
        }
    }

    EisensteinValue ev = shell_sum(spec.generators, /*stabilizer_gen=*/1, z, max_word_len,
                                   [&](const Isometry& m, HPoint pt) {
                                       return complex_pow(angle_sine(apply(m, pt)), p.s);
                                   });
    if (std::isnan(delta))
        ev.warnings.push_back("delta estimate unavailable at this budget; "
                              "conditional-regime check skipped");
    else if (p.s.real() <= delta + kDeltaMargin)
        ev.warnings.push_back(kConvergenceWarning);
    return ev;
}

EisensteinValue cusp_eisenstein(const std::vector<Isometry>& generators, const Isometry& scaling,
                                HPoint z, const SpectralPoint& p, int max_word_len) {
    p.validate();
    if (generators.empty()) throw DomainError("cusp_eisenstein: no generators");
    if (classify(generators[0]) != IsometryClass::Parabolic)
        throw DomainError("cusp_eisenstein: designated cusp generator is not parabolic");
    // scaling^{-1} gamma_a scaling must be the unit translation.
    const Isometry conj = scaling.inverse() * generators[0] * scaling;
    const Isometry unit_translation(1.0, 1.0, 0.0, 1.0);
    if (!conj.approx_equal(unit_translation, 1e-9) &&
        !conj.approx_equal(unit_translation.inverse(), 1e-9))
        throw DomainError("cusp_eisenstein: scaling matrix does not normalize the cusp");

    const Isometry unscale = scaling.inverse();
    EisensteinValue ev = shell_sum(generators, /*stabilizer_gen=*/1, z, max_word_len,
                                   [&](const Isometry& m, HPoint pt) {
                                       const HPoint w = apply(unscale * m, pt);
                                       return complex_pow(w.y, p.s);
                                   });
    if (p.s.real() <= 1.0)
        ev.warnings.push_back("cusp series outside the guaranteed absolute-convergence "
                              "half-plane Re s > 1");
    return ev;
}

EisensteinValue weighted_eisenstein(const SurfaceSpec& spec, HPoint z, const SpectralPoint& p,
                                    const Budgets& budgets) {
    EisensteinValue ev =
        hyperbolic_eisenstein(spec, z, p, budgets.max_word_len, budgets.delta_hint);
    const std::complex<double> weight = complex_pow(spec.pinching_length(), -p.s);
    ev.value *= weight;
    ev.tail_indicator *= std::abs(weight);
    return ev;
}

EisensteinValue starred_eisenstein(const SurfaceSpec& spec, HPoint z, const SpectralPoint& p,
                                   const Budgets& budgets) {
    EisensteinValue ev = weighted_eisenstein(spec, z, p, budgets);
    SpectralPoint pz = p;
    pz.trunc_k = budgets.trunc_k;
    pz.tail_tol = budgets.tail_tol;
    const ZetaValue quot = weighted_quotient_log(spec, pz, budgets.max_word_len,
                                                 budgets.max_length, nullptr,
                                                 budgets.delta_hint);
    const std::complex<double> factor = std::exp(quot.log_value);
    ev.value *= factor;
    ev.tail_indicator *= std::abs(factor);
    merge_warnings(ev.warnings, quot.warnings);
    return ev;
}

}  // namespace pinchlab
