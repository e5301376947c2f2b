#include "pinchlab/moebius.hpp"

#include <cmath>
#include <ostream>

namespace pinchlab {

Isometry::Isometry(double a, double b, double c, double d) : e_{a, b, c, d} {
    const double det = a * d - b * c;
    if (!std::isfinite(det) || det <= 0.0)
        throw ConstructionError("Isometry: determinant must be positive and finite");
    if (det != 1.0) {
        const double s = 1.0 / std::sqrt(det);
        for (auto& x : e_) x *= s;
    }
    const double tr = e_[0] + e_[3];
    const bool flip = tr < 0.0 || (tr == 0.0 && (e_[0] < 0.0 || (e_[0] == 0.0 && e_[1] < 0.0)));
    if (flip)
        for (auto& x : e_) x = -x;
}

Isometry Isometry::axis_scaling(double l) {
    const double h = std::exp(l / 2.0);
    return Isometry(h, 0.0, 0.0, 1.0 / h);
}

Isometry Isometry::operator*(const Isometry& r) const {
    return Isometry(e_[0] * r.e_[0] + e_[1] * r.e_[2], e_[0] * r.e_[1] + e_[1] * r.e_[3],
                    e_[2] * r.e_[0] + e_[3] * r.e_[2], e_[2] * r.e_[1] + e_[3] * r.e_[3]);
}

double Isometry::frobenius_norm() const {
    return std::sqrt(e_[0] * e_[0] + e_[1] * e_[1] + e_[2] * e_[2] + e_[3] * e_[3]);
}

bool Isometry::approx_equal(const Isometry& rhs, double tol) const {
    for (int i = 0; i < 4; ++i)
        if (std::abs(e_[i] - rhs.e_[i]) > tol) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const Isometry& g) {
    return os << "[[" << g.a() << ", " << g.b() << "], [" << g.c() << ", " << g.d() << "]]";
}

HPoint apply(const Isometry& g, HPoint z) {
    if (!(z.y > 0.0)) throw DomainError("apply: point must lie in the upper half-plane");
    const double cx = g.c() * z.x + g.d();
    const double cy = g.c() * z.y;
    const double n = cx * cx + cy * cy;
    const double ax = g.a() * z.x + g.b();
    const double ay = g.a() * z.y;
    HPoint w;
    w.x = (ax * cx + ay * cy) / n;
    w.y = z.y / n;  // (ad - bc) y / |cz + d|^2 with det = 1
    if (!(w.y > 0.0) || !std::isfinite(w.x) || !std::isfinite(w.y))
        throw DomainError("apply: result left the upper half-plane (degenerate input)");
    return w;
}

double translation_length(const Isometry& g) {
    const double t = std::abs(g.trace());
    if (t <= 2.0 + 1e-12)
        throw NotHyperbolicError("translation_length: |tr| = " + std::to_string(t) +
                                 " is not hyperbolic");
    return 2.0 * std::acosh(t / 2.0);
}

double angle_sine(HPoint z) {
    if (!(z.y > 0.0)) throw DomainError("angle_sine: point must lie in the upper half-plane");
    return z.y / std::hypot(z.x, z.y);
}

IsometryClass classify(const Isometry& g) {
    const double t = std::abs(g.trace());
    if (t > 2.0 + kTraceClassTol) return IsometryClass::Hyperbolic;
    if (t < 2.0 - kTraceClassTol) return IsometryClass::Elliptic;
    // |tr| == 2 band: identity iff off-diagonal vanishes too.
    if (std::abs(g.b()) <= kTraceClassTol && std::abs(g.c()) <= kTraceClassTol &&
        std::abs(g.a() - g.d()) <= kTraceClassTol)
        return IsometryClass::Identity;
    return IsometryClass::Parabolic;
}

}  // namespace pinchlab
