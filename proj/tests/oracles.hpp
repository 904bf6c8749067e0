// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, independent of the library's computation paths:
// dense boundary scans for the minimizer-backed metrics, adaptive quadrature
// for the elliptic integral, geodesic bisection for the hyperbolic midpoint,
// and a brute-force reflection search for the sector w quasi-metric.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "metriclab/geometry.hpp"
#include "metriclab/metrics.hpp"
#include "metriclab/moebius.hpp"

namespace oracles {

using metriclab::complex_t;
using metriclab::Domain;
using metriclab::DomainKind;
using metriclab::Point;

// Minimum of a cost over a dense scan of the domain boundary; no refinement,
// no shared code with the library minimizer.
inline double dense_boundary_min(const Domain& G,
                                 const std::function<double(complex_t)>& cost,
                                 long samples) {
    double best = std::numeric_limits<double>::infinity();
    switch (G.kind()) {
        case DomainKind::unit_ball: {
            for (long i = 0; i < samples; ++i) {
                const double phi = 2.0 * std::numbers::pi * i / samples;
                best = std::min(best, cost({std::cos(phi), std::sin(phi)}));
            }
            return best;
        }
        case DomainKind::half_space: {
            for (long i = 0; i < samples; ++i) {
                const double u =
                    -0.5 * std::numbers::pi + std::numbers::pi * (i + 0.5) / samples;
                best = std::min(best, cost({std::tan(u), 0.0}));
            }
            return best;
        }
        case DomainKind::sector: {
            const double theta = G.angle();
            const complex_t d1{std::cos(theta), std::sin(theta)};
            best = cost({0.0, 0.0});
            for (long i = 1; i < samples; ++i) {
                const double u = 0.5 * std::numbers::pi * i / samples;
                const double r = std::tan(u);
                best = std::min(best, cost({r, 0.0}));
                best = std::min(best, cost(r * d1));
            }
            return best;
        }
    }
    return best;
}

inline double scan_s(const Domain& G, complex_t x, complex_t y, long samples) {
    const double inf = dense_boundary_min(
        G, [&](complex_t z) { return std::abs(x - z) + std::abs(z - y); }, samples);
    return std::abs(x - y) / inf;
}

inline double scan_barrlund(const Domain& G, double p, complex_t x, complex_t y,
                            long samples) {
    const double inv_p = 1.0 / p;
    const double inf = dense_boundary_min(
        G,
        [&](complex_t z) {
            return std::pow(std::pow(std::abs(x - z), p) + std::pow(std::abs(z - y), p),
                            inv_p);
        },
        samples);
    return std::abs(x - y) / inf;
}

// Adaptive Simpson quadrature.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double fa, double fm, double fb, double whole,
                               double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

// K(r) by quadrature of the defining integral, regularized with x = sin(phi).
inline double elliptic_k_quadrature(double r) {
    const double r2 = r * r;
    return integrate(
        [r2](double phi) {
            const double s = std::sin(phi);
            return 1.0 / std::sqrt(1.0 - r2 * s * s);
        },
        0.0, 0.5 * std::numbers::pi, 1e-14);
}

// Hyperbolic midpoint by bisection along the geodesic: map x to the origin
// with a disk automorphism, walk the straight geodesic toward the image of y,
// and balance rho(x, m) against rho(m, y).
inline complex_t midpoint_by_bisection(complex_t x, complex_t y) {
    using metriclab::hyperbolic_distance;
    using metriclab::MoebiusMap;
    const Domain disk = Domain::unit_ball(2);
    const MoebiusMap to_origin = MoebiusMap::disk_automorphism(x);
    const MoebiusMap back = to_origin.inverse();
    const complex_t ytick = to_origin.apply(y);
    const double ry = std::abs(ytick);
    const complex_t dir = ytick / ry;
    const Point px = Point::from_complex(x);
    const Point py = Point::from_complex(y);
    double lo = 0.0, hi = ry;
    for (int i = 0; i < 200 && hi - lo > 1e-16; ++i) {
        const double mid = 0.5 * (lo + hi);
        const complex_t cand = back.apply(mid * dir);
        const Point pc = Point::from_complex(cand);
        const double left = hyperbolic_distance(disk, px, pc);
        const double right = hyperbolic_distance(disk, pc, py);
        (left < right ? lo : hi) = mid;
    }
    return back.apply(0.5 * (lo + hi) * dir);
}

// Sector w from the definition with reflection sets built by brute force:
// scan the boundary densely for near-nearest points, reflect through each.
inline double scan_sector_w(const Domain& G, complex_t x, complex_t y, long samples) {
    auto reflections = [&](complex_t z) {
        const double theta = G.angle();
        const complex_t d1{std::cos(theta), std::sin(theta)};
        std::vector<complex_t> boundary;
        boundary.push_back({0.0, 0.0});
        for (long i = 1; i < samples; ++i) {
            const double u = 0.5 * std::numbers::pi * i / samples;
            const double r = std::tan(u);
            boundary.push_back({r, 0.0});
            boundary.push_back(r * d1);
        }
        double dmin = std::numeric_limits<double>::infinity();
        for (complex_t b : boundary) dmin = std::min(dmin, std::abs(z - b));
        std::vector<complex_t> out;
        for (complex_t b : boundary)
            if (std::abs(z - b) <= dmin * (1.0 + 1e-9)) out.push_back(2.0 * b - z);
        return out;
    };
    double denom = std::numeric_limits<double>::infinity();
    for (complex_t r : reflections(y)) denom = std::min(denom, std::abs(x - r));
    for (complex_t r : reflections(x)) denom = std::min(denom, std::abs(y - r));
    return std::abs(x - y) / denom;
}

}  // namespace oracles
