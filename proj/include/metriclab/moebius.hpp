// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Sense-preserving Moebius transformations of the plane, disk automorphisms,
// sector power maps, the explicit hyperbolic midpoint, and image radii of
// concentric circles under disk automorphisms.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "metriclab/geometry.hpp"

namespace metriclab {

/// z -> (a z + b) / (c z + d) with ad - bc != 0. Coefficients are projective:
/// scaling all four by a nonzero constant gives the same map.
class MoebiusMap {
public:
    MoebiusMap(complex_t a, complex_t b, complex_t c, complex_t d) : coef_{a, b, c, d} {
        if (detail::cabs(det()) <= 1e-300)
            throw degenerate_map_error("MoebiusMap: vanishing determinant");
    }

    static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

    /// Disk automorphism T_a(z) = (z - a) / (1 - conj(a) z); maps the unit
    /// disk onto itself and a to the origin. T_0 is the identity.
    static MoebiusMap disk_automorphism(complex_t a) {
        if (detail::norm_sq(a) >= 1.0)
            throw domain_membership_error("disk_automorphism: |a| < 1 required");
        return {1.0, -a, -std::conj(a), 1.0};
    }

    static MoebiusMap rotation(double angle) {
        return {std::polar(1.0, angle), 0.0, 0.0, 1.0};
    }

    complex_t a() const { return coef_[0]; }
    complex_t b() const { return coef_[1]; }
    complex_t c() const { return coef_[2]; }
    complex_t d() const { return coef_[3]; }

    complex_t det() const { return coef_[0] * coef_[3] - coef_[1] * coef_[2]; }

    complex_t apply(complex_t z) const {
        const complex_t den = coef_[2] * z + coef_[3];
        if (detail::cabs(den) <= 1e-300)
            throw pole_error("MoebiusMap::apply: input at the pole");
        return (coef_[0] * z + coef_[1]) / den;
    }

    MoebiusMap inverse() const {  // adjugate
        return {coef_[3], -coef_[1], -coef_[2], coef_[0]};
    }

    /// Coefficients scaled so the largest-magnitude one is exactly 1; use for
    /// comparing maps without spurious scale differences.
    std::array<complex_t, 4> normalized() const {
        int imax = 0;
        for (int i = 1; i < 4; ++i)
            if (detail::norm_sq(coef_[i]) > detail::norm_sq(coef_[imax])) imax = i;
        std::array<complex_t, 4> out;
        for (int i = 0; i < 4; ++i) out[i] = coef_[i] / coef_[imax];
        return out;
    }

private:
    std::array<complex_t, 4> coef_;
};

inline MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
    return {f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
            f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d()};
}

/// A sense-reversing planar Moebius map acts as z -> m(conj(z)); nothing
/// beyond the pre-conjugation is ever needed here, since reflections leave
/// hyperbolic distances invariant.
struct ConjugatedMoebiusMap {
    MoebiusMap map;
    complex_t apply(complex_t z) const { return map.apply(std::conj(z)); }
};

/// Conformal power map S_alpha -> S_beta, z -> z^{beta/alpha}, with the
/// argument of z read in (0, alpha).
inline complex_t sector_power_map(double alpha, double beta, complex_t z) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (!(alpha > 0.0) || alpha > two_pi || !(beta > 0.0) || beta > two_pi)
        throw invalid_parameter_error("sector_power_map: angles must lie in (0, 2*pi]");
    const double arg = detail::folded_argument(z);
    if (z == complex_t{0.0, 0.0} || !(arg > 0.0) || !(arg < alpha))
        throw domain_membership_error("sector_power_map: z is not in the source sector");
    const double e = beta / alpha;
    return std::polar(std::pow(detail::cabs(z), e), e * arg);
}

/// The hyperbolic midpoint q of x, y in the unit ball:
///   q = (y(1-|x|^2) + x(1-|y|^2)) / (1 - |x|^2 |y|^2 + A[x,y] sqrt((1-|x|^2)(1-|y|^2))),
/// satisfying rho(x,q) = rho(q,y) = rho(x,y)/2. The formula is planar but its
/// coefficients depend only on norms, so it evaluates componentwise in any
/// dimension (the computation lives in the plane through x, y and the origin).
inline Point hyperbolic_midpoint(const Point& x, const Point& y) {
    if (x.norm_sq() >= 1.0 || y.norm_sq() >= 1.0)
        throw domain_membership_error("hyperbolic_midpoint: points must lie in the unit ball");
    const double sx = (1.0 - x.norm()) * (1.0 + x.norm());
    const double sy = (1.0 - y.norm()) * (1.0 + y.norm());
    const double d = distance(x, y);
    const double bracket = std::sqrt(d * d + sx * sy);
    const double denom = 1.0 - x.norm_sq() * y.norm_sq() + bracket * std::sqrt(sx * sy);
    std::vector<double> q(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) q[i] = (y[i] * sx + x[i] * sy) / denom;
    return Point(std::move(q));
}

struct DiskImageRadii {
    double inner;
    double outer;
};

/// Exact minimum and maximum of |T_a(z)| over the circle |z| = r:
/// inner = ||a| - r| / (1 - |a| r), outer = (|a| + r) / (1 + |a| r).
/// Equivalently, B(0, inner) is the largest origin-centered disk inside
/// T_a(B(0, r)) and B(0, outer) the smallest one containing it.
inline DiskImageRadii disk_image_radii(complex_t a, double r) {
    const double na = detail::cabs(a);
    if (na >= 1.0)
        throw domain_membership_error("disk_image_radii: |a| < 1 required");
    if (!(r >= 0.0) || r >= 1.0)
        throw invalid_parameter_error("disk_image_radii: radius must lie in [0, 1)");
    return {std::abs(na - r) / (1.0 - na * r), (na + r) / (1.0 + na * r)};
}

}  // namespace metriclab
