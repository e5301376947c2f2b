#include "pinchlab/surface.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_set>

#include "pinchlab/io.hpp"

namespace pinchlab {

namespace {

constexpr double kLengthCheckTol = 1e-9;

struct Interval {
    double lo, hi;
};

// Geodesics as semicircles over real intervals.  Two geodesics are
// disjoint in H iff their endpoint intervals are strictly nested or
// strictly separated.
bool geodesics_disjoint(Interval p, Interval q) {
    if (p.hi < q.lo || q.hi < p.lo) return true;                  // separated
    if (p.lo < q.lo && q.hi < p.hi) return true;                  // q nested in p
    if (q.lo < p.lo && p.hi < q.hi) return true;                  // p nested in q
    return false;
}

}  // namespace

SurfaceSpec build_cylinder(double l) {
    if (!(l > 0.0)) throw ConstructionError("build_cylinder: length must be positive");
    SurfaceSpec spec;
    spec.boundary_lengths = {l};
    spec.generators = {Isometry::axis_scaling(l)};
    spec.euler_characteristic = 0;
    spec.pinching_index = 0;
    return spec;
}

SurfaceSpec build_pants(double l1, double l2, double l3) {
    if (!(l1 > 0.0) || !(l2 > 0.0) || !(l3 > 0.0))
        throw ConstructionError("build_pants: boundary lengths must be positive");

    const double t2 = 2.0 * std::cosh(l2 / 2.0);
    const double t3 = 2.0 * std::cosh(l3 / 2.0);
    const double sh = 2.0 * std::sinh(l1 / 2.0);

    // tr g2 = t2 and tr(g1 g2) = -t3 (negative branch):
    //   a e^{l1/2} + d e^{-l1/2} = -t3,  a + d = t2.
    const double a = -(t3 + t2 * std::exp(-l1 / 2.0)) / sh;
    const double d = t2 - a;
    const double bc = a * d - 1.0;  // a < 0 < d, so bc < 0
    if (!(bc < 0.0)) throw ConstructionError("build_pants: trace equations degenerate");
    const double s = std::sqrt(-bc);  // b = -s, c = s puts the g2 axis endpoints at product 1

    SurfaceSpec spec;
    spec.boundary_lengths = {l1, l2, l3};
    spec.generators = {Isometry::axis_scaling(l1), Isometry(a, -s, s, d)};
    spec.euler_characteristic = -1;
    spec.pinching_index = 0;

    // Discreteness certificate.  With b = -c the common perpendicular of
    // the two axes is the unit semicircle L2; the reflections r1 = g1 r2
    // and r3 = r2 g2 fix |z| = e^{l1/2} and the circle over the roots of
    // x g2(x) = 1.  If L1, L2, L3 are pairwise disjoint, the reflection
    // group they generate is discrete (Poincare) and <g1,g2> = <r1 r2,
    // r2 r3> is its orientation subgroup: free, discrete, purely
    // hyperbolic.
    const double rt = std::sqrt((s - 1.0) * (s + 1.0) + 1.0);  // = sqrt(s^2) relic guard
    (void)rt;
    const double u = (s + 1.0) / a;  // roots of a x^2 - 2 s x - d = 0 scaled: (s +- 1)/a
    const double v = (s - 1.0) / a;
    const Interval L1{-std::exp(l1 / 2.0), std::exp(l1 / 2.0)};
    const Interval L2{-1.0, 1.0};
    const Interval L3{std::min(u, v), std::max(u, v)};
    if (!geodesics_disjoint(L1, L2) || !geodesics_disjoint(L1, L3) ||
        !geodesics_disjoint(L2, L3))
        throw ConstructionError("build_pants: reflection-line certificate failed");

    const Isometry g12 = spec.generators[0] * spec.generators[1];
    const double errs[3] = {std::abs(translation_length(spec.generators[0]) - l1),
                            std::abs(translation_length(spec.generators[1]) - l2),
                            std::abs(translation_length(g12) - l3)};
    for (double e : errs)
        if (!(e <= kLengthCheckTol))
            throw ConstructionError("build_pants: boundary length check failed (err=" +
                                    std::to_string(errs[0]) + "," + std::to_string(errs[1]) +
                                    "," + std::to_string(errs[2]) + ")");
    return spec;
}

Isometry word_matrix(const SurfaceSpec& spec, const Word& w) {
    Isometry m;
    for (Letter v : w.letters()) {
        const int g = v > 0 ? v : -v;
        if (g > spec.rank()) throw DomainError("word_matrix: letter outside the generator set");
        const Isometry& gen = spec.generators[g - 1];
        m = m * (v > 0 ? gen : gen.inverse());
    }
    return m;
}

namespace {

// Incremental-product DFS over cyclically reduced words of exact length n:
// prefixes carry their matrix, one multiplication per node.
struct ClassEnumerator {
    const SurfaceSpec& spec;
    int target_len;
    double max_length;
    std::size_t class_cap;
    std::vector<ConjClass>* out;
    EnumerationStats* stats;
    std::vector<Letter> word;
    std::vector<Isometry> gens;  // 2*rank: gens[2g-2] = g, gens[2g-1] = g^-1

    void run() {
        word.clear();
        dfs(Isometry::identity());
    }

    void dfs(const Isometry& m) {
        const int depth = static_cast<int>(word.size());
        if (depth == target_len) {
            emit(m);
            return;
        }
        const int rank = spec.rank();
        for (int r = 0; r < 2 * rank; ++r) {
            const int g = r / 2 + 1;
            const Letter v = static_cast<Letter>(r % 2 == 0 ? g : -g);
            if (depth > 0 && word.back() == letter_inverse(v)) continue;
            // cyclic reducedness: last letter may not be the inverse of the first
            if (depth == target_len - 1 && !word.empty() && v == letter_inverse(word.front()))
                continue;
            word.push_back(v);
            dfs(m * gens[r]);
            word.pop_back();
        }
    }

    void emit(const Isometry& m) {
        if (stats) ++stats->words_visited;
        const Word w{std::span<const Letter>(word)};
        if (w.size() != static_cast<std::size_t>(target_len)) return;  // cancelled: not reduced
        if (canonical_class_word(w) != w) return;  // not the class representative

        const double tr = std::abs(m.trace());
        if (tr <= 2.0 + kTraceClassTol) {
            if (stats) ++stats->flagged_nonhyperbolic;
            return;
        }
        const double len = 2.0 * std::acosh(tr / 2.0);
        if (len > max_length) return;
        if (out->size() >= class_cap)
            throw BudgetExceededError("enumerate_conj_classes: class cap " +
                                      std::to_string(class_cap) + " exceeded");
        ConjClass c;
        c.cyclic_word = w;
        c.primitive = is_primitive_cyclic(w);
        c.length = len;
        c.trace = tr;
        out->push_back(std::move(c));
        if (stats) ++stats->classes_emitted;
    }
};

}  // namespace

std::vector<ConjClass> enumerate_conj_classes(const SurfaceSpec& spec, int max_word_len,
                                              double max_length, std::size_t class_cap,
                                              EnumerationStats* stats) {
    if (max_word_len < 1) throw DomainError("enumerate_conj_classes: max_word_len must be >= 1");
    std::vector<ConjClass> out;
    ClassEnumerator en{spec, 0, max_length, class_cap, &out, stats, {}, {}};
    en.gens.reserve(2 * spec.rank());
    for (int g = 1; g <= spec.rank(); ++g) {
        en.gens.push_back(spec.generators[g - 1]);
        en.gens.push_back(spec.generators[g - 1].inverse());
    }
    for (int n = 1; n <= max_word_len; ++n) {
        en.target_len = n;
        en.run();
    }
    std::sort(out.begin(), out.end(), [](const ConjClass& x, const ConjClass& y) {
        if (x.length != y.length) return x.length < y.length;
        return x.cyclic_word < y.cyclic_word;
    });
    return out;
}

std::vector<Word> coset_reps(const SurfaceSpec& spec, int max_word_len) {
    return coset_reps_excluding(spec.rank(), 1, max_word_len);
}

DeltaEstimate estimate_delta(const SurfaceSpec& spec, int max_word_len, double max_length) {
    if (spec.is_cylinder()) return DeltaEstimate{0.0, 0.0, 1, 0.0, 0.0};

    auto classes = enumerate_conj_classes(spec, max_word_len, max_length);
    std::erase_if(classes, [](const ConjClass& c) { return !c.primitive; });
    if (classes.size() < 50)
        throw InsufficientDataError("estimate_delta: only " + std::to_string(classes.size()) +
                                    " primitive classes below the cutoff");

    // The word-length budget truncates the spectrum: beyond the shortest
    // geodesic that needed the full budget, counts are incomplete.
    double complete = classes.back().length;
    for (const auto& c : classes)
        if (c.word_len() == max_word_len) {
            complete = std::min(complete, c.length);
            break;  // classes are length-sorted
        }

    const double lo = classes.front().length + 0.5 * (complete - classes.front().length);
    // Regress y = log N(T) + log T on T over [lo, complete]:
    // N(T) ~ e^{dT}/(dT) gives slope d.
    std::vector<double> xs, ys;
    std::size_t count = 0;
    for (const auto& c : classes) {
        if (c.length > complete) break;
        ++count;
        if (c.length < lo) continue;
        xs.push_back(c.length);
        ys.push_back(std::log(static_cast<double>(count)) + std::log(c.length));
    }
    if (xs.size() < 8)
        throw InsufficientDataError("estimate_delta: fit window has too few classes");

    const std::size_t n = xs.size();
    double xm = 0, ym = 0;
    for (std::size_t i = 0; i < n; ++i) {
        xm += xs[i];
        ym += ys[i];
    }
    xm /= static_cast<double>(n);
    ym /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - xm) * (xs[i] - xm);
        sxy += (xs[i] - xm) * (ys[i] - ym);
    }
    const double slope = sxy / sxx;
    double ssr = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - ym - slope * (xs[i] - xm);
        ssr += r * r;
    }
    const double stderr_slope =
        n > 2 ? std::sqrt(ssr / (static_cast<double>(n - 2) * sxx)) : 0.0;

    DeltaEstimate est;
    est.value = slope;
    est.uncertainty = stderr_slope;
    est.classes_used = static_cast<int>(n);
    est.fit_lo = lo;
    est.fit_hi = complete;
    return est;
}

void write_spectrum_csv(std::ostream& os, const std::vector<ConjClass>& classes) {
    os << "canonical_word,trace,length,primitive,word_len\n";
    for (const auto& c : classes)
        os << c.cyclic_word.str() << ',' << format_sig17(c.trace) << ','
           << format_sig17(c.length) << ',' << (c.primitive ? 1 : 0) << ',' << c.word_len()
           << '\n';
}

}  // namespace pinchlab
