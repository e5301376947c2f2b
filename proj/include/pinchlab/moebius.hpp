#ifndef PINCHLAB_MOEBIUS_HPP
#define PINCHLAB_MOEBIUS_HPP

#include <array>
#include <iosfwd>

#include "pinchlab/errors.hpp"

namespace pinchlab {

// Point of the upper half-plane, y > 0.
struct HPoint {
    double x = 0.0;
    double y = 1.0;
};

// Classification tolerance on |tr| - 2.  Words landing inside the band are
// reported Parabolic; enumeration treats them as flagged, never as
// hyperbolic with a tiny length.
inline constexpr double kTraceClassTol = 1e-10;

enum class IsometryClass { Hyperbolic, Parabolic, Elliptic, Identity };

// Unit-determinant real 2x2 matrix acting on the upper half-plane.
// Construction renormalizes the determinant to 1 and fixes the PSL(2,R)
// sign ambiguity by making the trace non-negative.
class Isometry {
  public:
    Isometry() : e_{1.0, 0.0, 0.0, 1.0} {}
    Isometry(double a, double b, double c, double d);

    static Isometry identity() { return Isometry(); }
    // diag(e^{l/2}, e^{-l/2}): translation by l along the imaginary axis.
    static Isometry axis_scaling(double l);

    double a() const { return e_[0]; }
    double b() const { return e_[1]; }
    double c() const { return e_[2]; }
    double d() const { return e_[3]; }

    double trace() const { return e_[0] + e_[3]; }
    Isometry inverse() const { return Isometry(e_[3], -e_[1], -e_[2], e_[0]); }
    Isometry operator*(const Isometry& rhs) const;

    double frobenius_norm() const;
    bool approx_equal(const Isometry& rhs, double tol) const;

  private:
    std::array<double, 4> e_;
};

std::ostream& operator<<(std::ostream& os, const Isometry& g);

// (a z + b) / (c z + d) in half-plane coordinates.
HPoint apply(const Isometry& g, HPoint z);

// 2 arccosh(|tr|/2).  Throws NotHyperbolicError when |tr| <= 2 + 1e-12.
double translation_length(const Isometry& g);

// sin of the polar angle of z measured from the imaginary axis:
//   sin theta(z) = y/|z| = 1/cosh(dist(z, axis)).
double angle_sine(HPoint z);

IsometryClass classify(const Isometry& g);

}  // namespace pinchlab

#endif
