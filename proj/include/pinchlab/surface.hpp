#ifndef PINCHLAB_SURFACE_HPP
#define PINCHLAB_SURFACE_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "pinchlab/moebius.hpp"
#include "pinchlab/words.hpp"

namespace pinchlab {

// Marked Fuchsian model of the working surfaces.
//
// Pants (three-funnel sphere, rank 2, chi = -1): generator g1 is
// diag(e^{l1/2}, e^{-l1/2}) so its axis is the imaginary axis; g2 solves
// tr g2 = 2 cosh(l2/2), tr(g1 g2) = -2 cosh(l3/2).  The boundary classes
// of g1, g2, g1 g2 then have geodesic lengths l1, l2, l3.
//
// Cylinder (elementary model <sigma_l>, rank 1, chi = 0): the single
// geodesic of length l; the degenerate cases of the series and products
// close in elementary form on it.
struct SurfaceSpec {
    std::vector<double> boundary_lengths;  // pants: {l1,l2,l3}; cylinder: {l}
    std::vector<Isometry> generators;      // pants: {g1,g2}; cylinder: {g1}
    int euler_characteristic = -1;
    int pinching_index = 0;  // index into boundary_lengths of the degenerating l

    int rank() const { return static_cast<int>(generators.size()); }
    bool is_cylinder() const { return generators.size() == 1; }
    double pinching_length() const { return boundary_lengths.at(pinching_index); }
};

// Builds the pants group for positive boundary lengths and certifies
// discreteness: g1 and g2 are exhibited as products of reflections in
// three pairwise disjoint geodesics (Poincare), which proves <g1,g2> is
// discrete, free of rank 2 and purely hyperbolic.  ConstructionError if
// the certificate fails or the boundary lengths do not reproduce within
// 1e-9.
SurfaceSpec build_pants(double l1, double l2, double l3);

SurfaceSpec build_cylinder(double l);

// Matrix of a word in the surface generators.
Isometry word_matrix(const SurfaceSpec& spec, const Word& w);

// Unoriented conjugacy class of the group, labelled by the canonical
// cyclically-reduced word.
struct ConjClass {
    Word cyclic_word;   // canonical: least over rotations and inversion
    bool primitive = true;
    double length = 0.0;  // 2 arccosh(|trace|/2)
    double trace = 0.0;   // >= 0 (PSL sign fixed)

    int word_len() const { return static_cast<int>(cyclic_word.size()); }
};

struct EnumerationStats {
    std::uint64_t words_visited = 0;
    std::uint64_t classes_emitted = 0;
    int flagged_nonhyperbolic = 0;  // |tr| within tolerance of 2: never silently kept
};

inline constexpr std::size_t kDefaultClassCap = 4'000'000;
inline constexpr double kNoLengthCutoff = std::numeric_limits<double>::infinity();

// All conjugacy classes (primitive flag set per class) with cyclic word
// length <= max_word_len and geodesic length <= max_length, deduplicated
// under rotation and inversion, sorted by length ascending with ties
// broken by canonical word order.  Throws BudgetExceededError past the cap.
std::vector<ConjClass> enumerate_conj_classes(const SurfaceSpec& spec, int max_word_len,
                                              double max_length = kNoLengthCutoff,
                                              std::size_t class_cap = kDefaultClassCap,
                                              EnumerationStats* stats = nullptr);

// Representatives of <sigma_l> \ Gamma: the identity plus every reduced
// word not starting with g1^{+-1}, up to max_word_len.
std::vector<Word> coset_reps(const SurfaceSpec& spec, int max_word_len);

struct DeltaEstimate {
    double value = 0.0;
    double uncertainty = 0.0;
    int classes_used = 0;
    double fit_lo = 0.0, fit_hi = 0.0;  // length window of the regression
};

// Exponent of convergence from the growth of the primitive length
// counting function N(T) ~ e^{dT}/(dT): least squares of log N + log T
// against T over the top half of the completely-enumerated length range.
// Cylinder answers 0 exactly.  InsufficientData below 50 classes.
DeltaEstimate estimate_delta(const SurfaceSpec& spec, int max_word_len,
                             double max_length = kNoLengthCutoff);

// Length-spectrum CSV: canonical_word,trace,length,primitive,word_len
// with 17 significant digits.
void write_spectrum_csv(std::ostream& os, const std::vector<ConjClass>& classes);

}  // namespace pinchlab

#endif
