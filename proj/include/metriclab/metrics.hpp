// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0
//
// The hyperbolic metric and six intrinsic metrics / quasi-metrics on the
// canonical domains. Closed forms are used wherever they exist; the
// triangular ratio and Barrlund metrics fall back to the boundary minimizer.
// In dimensions above two, values on the ball reduce to the plane through
// x, y and the origin, and values on the half-space to the vertical plane
// through x and y.

#pragma once

#include <algorithm>
#include <cmath>
#include <tuple>
#include <utility>

#include "metriclab/geometry.hpp"

namespace metriclab {

/// Selector for the metric evaluators. `barrlund` carries its exponent p >= 1.
struct MetricKind {
    enum class Tag {
        hyperbolic,       // rho
        distance_ratio,   // j
        jstar,            // j* = th(j/2)
        triangular_ratio, // s
        point_pair,       // p
        w_quasi,          // w (convex domains)
        t_metric,         // t
        barrlund,         // b_{G,p}
    };

    Tag tag;
    double exponent = 2.0;

    static MetricKind hyperbolic() { return {Tag::hyperbolic}; }
    static MetricKind distance_ratio() { return {Tag::distance_ratio}; }
    static MetricKind jstar() { return {Tag::jstar}; }
    static MetricKind triangular_ratio() { return {Tag::triangular_ratio}; }
    static MetricKind point_pair() { return {Tag::point_pair}; }
    static MetricKind w_quasi() { return {Tag::w_quasi}; }
    static MetricKind t_metric() { return {Tag::t_metric}; }
    static MetricKind barrlund(double p) {
        if (!(p >= 1.0))
            throw invalid_parameter_error("Barrlund exponent must satisfy p >= 1");
        return {Tag::barrlund, p};
    }

    const char* name() const {
        switch (tag) {
            case Tag::hyperbolic: return "rho";
            case Tag::distance_ratio: return "j";
            case Tag::jstar: return "jstar";
            case Tag::triangular_ratio: return "s";
            case Tag::point_pair: return "p";
            case Tag::w_quasi: return "w";
            case Tag::t_metric: return "t";
            case Tag::barrlund: return "barrlund";
        }
        return "?";
    }
};

namespace detail {

// Isometric coordinates of (x, y) in the 2-plane through x, y and the origin.
// Any orthonormal frame of that plane gives the same metric values.
inline std::pair<complex_t, complex_t> plane_through_origin(const Point& x, const Point& y) {
    const std::size_t n = x.dim();
    const double nx = x.norm();
    const double ny = y.norm();
    if (nx == 0.0 && ny == 0.0) return {complex_t{0.0, 0.0}, complex_t{0.0, 0.0}};
    const bool base_is_x = nx >= ny;
    const Point& base = base_is_x ? x : y;
    const Point& other = base_is_x ? y : x;
    const double nb = base_is_x ? nx : ny;
    double par = 0.0;
    for (std::size_t i = 0; i < n; ++i) par += other[i] * base[i];
    par /= nb;
    double perp_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = other[i] - par * base[i] / nb;
        perp_sq += r * r;
    }
    const complex_t b2{nb, 0.0};
    const complex_t o2{par, std::sqrt(perp_sq)};
    return base_is_x ? std::make_pair(b2, o2) : std::make_pair(o2, b2);
}

// Isometric coordinates of (x, y) in the vertical plane through both points
// of the upper half-space (height = last coordinate).
inline std::pair<complex_t, complex_t> vertical_plane(const Point& x, const Point& y) {
    const std::size_t n = x.dim();
    double horiz_sq = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = y[i] - x[i];
        horiz_sq += d * d;
    }
    return {complex_t{0.0, x.last()}, complex_t{std::sqrt(horiz_sq), y.last()}};
}

// th(rho/2) on the half-space; coincides with w, s and p there.
inline double halfspace_tanh_half_rho(const Point& x, const Point& y) {
    const double d = distance(x, y);
    return d / std::sqrt(d * d + 4.0 * x.last() * y.last());
}

inline complex_t sector_power_image(double from_angle, double to_angle, complex_t z) {
    const double e = to_angle / from_angle;
    const double a = folded_argument(z);
    return std::polar(std::pow(cabs(z), e), e * a);
}

// Dilations z -> z / m are hyperbolic isometries of a sector and leave every
// normalized metric here invariant; rescaling by the larger modulus keeps
// power maps and the boundary minimizer inside their working range whatever
// the input scale.
inline std::pair<complex_t, complex_t> normalize_sector_pair(complex_t x, complex_t y) {
    const double m = std::max(cabs(x), cabs(y));
    return {x / m, y / m};
}

// Horizontal translation plus dilation: boundary-preserving similarities of
// the half-plane under which the normalized metrics are invariant.
inline std::pair<complex_t, complex_t> normalize_halfplane_pair(complex_t x, complex_t y) {
    const double shift = 0.5 * (x.real() + y.real());
    x -= shift;
    y -= shift;
    const double m = std::max(cabs(x), cabs(y));
    return {x / m, y / m};
}

inline double rho_halfplane(complex_t x, complex_t y) {
    const double d = cabs(x - y);
    return 2.0 * std::atanh(d / std::sqrt(d * d + 4.0 * x.imag() * y.imag()));
}

// Broken-path infimum inf_z (|x-z| + |z-y|) over the boundary of a planar domain.
inline double broken_path_infimum(const Domain& G, complex_t x, complex_t y) {
    return boundary_infimum_2d(G, [x, y](complex_t z) {
               return cabs(x - z) + cabs(z - y);
           }).value;
}

inline double power_sum_infimum(const Domain& G, complex_t x, complex_t y, double p) {
    if (p == 2.0) {
        return boundary_infimum_2d(G, [x, y](complex_t z) {
                   return std::sqrt(norm_sq(x - z) + norm_sq(z - y));
               }).value;
    }
    const double inv_p = 1.0 / p;
    return boundary_infimum_2d(G, [x, y, p, inv_p](complex_t z) {
               return std::pow(std::pow(cabs(x - z), p) + std::pow(cabs(z - y), p), inv_p);
           }).value;
}

}  // namespace detail

/// Hyperbolic distance rho_G(x, y). On the sector it is computed through the
/// conformal power map z -> z^{pi/theta} onto the half-plane.
inline double hyperbolic_distance(const Domain& G, const Point& x, const Point& y) {
    G.require_member(x, "hyperbolic_distance");
    G.require_member(y, "hyperbolic_distance");
    if (x == y) return 0.0;
    switch (G.kind()) {
        case DomainKind::half_space: {
            const double d = distance(x, y);
            return 2.0 * std::atanh(d / std::sqrt(d * d + 4.0 * x.last() * y.last()));
        }
        case DomainKind::unit_ball: {
            const double d = distance(x, y);
            const double sx = (1.0 - x.norm()) * (1.0 + x.norm());
            const double sy = (1.0 - y.norm()) * (1.0 + y.norm());
            return 2.0 * std::asinh(d / std::sqrt(sx * sy));
        }
        case DomainKind::sector: {
            const double theta = G.angle();
            const auto [zx, zy] = detail::normalize_sector_pair(x.to_complex(), y.to_complex());
            const complex_t u = detail::sector_power_image(theta, std::numbers::pi, zx);
            const complex_t v = detail::sector_power_image(theta, std::numbers::pi, zy);
            return detail::rho_halfplane(u, v);
        }
    }
    return 0.0;
}

/// Distance ratio metric j_G(x, y) = log(1 + |x-y| / min(d(x), d(y))).
inline double distance_ratio_metric(const Domain& G, const Point& x, const Point& y) {
    G.require_member(x, "distance_ratio_metric");
    G.require_member(y, "distance_ratio_metric");
    if (x == y) return 0.0;
    const double m = std::min(boundary_distance(G, x), boundary_distance(G, y));
    return std::log1p(distance(x, y) / m);
}

/// j*_G = th(j_G/2) = |x-y| / (|x-y| + 2 min(d(x), d(y))).
inline double jstar_metric(const Domain& G, const Point& x, const Point& y) {
    G.require_member(x, "jstar_metric");
    G.require_member(y, "jstar_metric");
    if (x == y) return 0.0;
    const double d = distance(x, y);
    const double m = std::min(boundary_distance(G, x), boundary_distance(G, y));
    return d / (d + 2.0 * m);
}

/// t_G = |x-y| / (|x-y| + d(x) + d(y)).
inline double t_metric(const Domain& G, const Point& x, const Point& y) {
    G.require_member(x, "t_metric");
    G.require_member(y, "t_metric");
    if (x == y) return 0.0;
    const double d = distance(x, y);
    return d / (d + boundary_distance(G, x) + boundary_distance(G, y));
}

/// Point pair function p_G = |x-y| / sqrt(|x-y|^2 + 4 d(x) d(y)).
inline double point_pair_function(const Domain& G, const Point& x, const Point& y) {
    G.require_member(x, "point_pair_function");
    G.require_member(y, "point_pair_function");
    if (x == y) return 0.0;
    const double d = distance(x, y);
    return d / std::sqrt(d * d + 4.0 * boundary_distance(G, x) * boundary_distance(G, y));
}

/// Triangular ratio metric s_G = |x-y| / inf_z (|x-z| + |z-y|). Closed form
/// on the half-space (where it equals th(rho/2)); boundary minimization on
/// the ball and sector.
inline double triangular_ratio_metric(const Domain& G, const Point& x, const Point& y) {
    G.require_member(x, "triangular_ratio_metric");
    G.require_member(y, "triangular_ratio_metric");
    if (x == y) return 0.0;
    switch (G.kind()) {
        case DomainKind::half_space:
            return detail::halfspace_tanh_half_rho(x, y);
        case DomainKind::unit_ball: {
            complex_t u, v;
            if (G.dim() == 2) {
                u = x.to_complex();
                v = y.to_complex();
            } else {
                std::tie(u, v) = detail::plane_through_origin(x, y);
            }
            return detail::cabs(u - v) /
                   detail::broken_path_infimum(Domain::unit_ball(2), u, v);
        }
        case DomainKind::sector: {
            const auto [u, v] = detail::normalize_sector_pair(x.to_complex(), y.to_complex());
            return detail::cabs(u - v) / detail::broken_path_infimum(G, u, v);
        }
    }
    return 0.0;
}

/// The w quasi-metric; defined on convex domains only. Ball values use the
/// reflected-point closed form, half-space values equal th(rho/2), and sector
/// values come from the definition via reflections through nearest boundary
/// points of either argument.
inline double w_quasi_metric(const Domain& G, const Point& x, const Point& y) {
    G.require_member(x, "w_quasi_metric");
    G.require_member(y, "w_quasi_metric");
    if (!G.is_convex())
        throw non_convex_domain_error("w_quasi_metric: sector wider than pi");
    if (x == y) return 0.0;
    switch (G.kind()) {
        case DomainKind::half_space:
            return detail::halfspace_tanh_half_rho(x, y);
        case DomainKind::unit_ball: {
            // closed form requires |lo| <= |hi| with hi != 0
            const bool x_hi = x.norm() >= y.norm();
            const Point& hi = x_hi ? x : y;
            const Point& lo = x_hi ? y : x;
            const double r = hi.norm();
            const double scale = (2.0 - r) / r;
            double denom_sq = 0.0;
            for (std::size_t i = 0; i < hi.dim(); ++i) {
                const double d = lo[i] - scale * hi[i];
                denom_sq += d * d;
            }
            return distance(x, y) / std::sqrt(denom_sq);
        }
        case DomainKind::sector: {
            const complex_t u = x.to_complex();
            const complex_t v = y.to_complex();
            double denom = std::numeric_limits<double>::infinity();
            for (const Point& z : nearest_boundary_points(G, y))
                denom = std::min(denom, detail::cabs(u - (2.0 * z.to_complex() - v)));
            for (const Point& z : nearest_boundary_points(G, x))
                denom = std::min(denom, detail::cabs(v - (2.0 * z.to_complex() - u)));
            return detail::cabs(u - v) / denom;
        }
    }
    return 0.0;
}

/// Barrlund metric b_{G,p} = |x-y| / inf_z (|x-z|^p + |z-y|^p)^{1/p}. The
/// p = 2 ball and half-space cases have closed forms; everything else goes
/// through the boundary minimizer.
inline double barrlund_metric(const Domain& G, double p, const Point& x, const Point& y) {
    if (!(p >= 1.0))
        throw invalid_parameter_error("barrlund_metric: exponent must satisfy p >= 1");
    G.require_member(x, "barrlund_metric");
    G.require_member(y, "barrlund_metric");
    if (x == y) return 0.0;
    const double d = distance(x, y);
    if (p == 2.0 && G.kind() == DomainKind::unit_ball) {
        double sum_sq = 0.0;
        for (std::size_t i = 0; i < x.dim(); ++i) {
            const double s = x[i] + y[i];
            sum_sq += s * s;
        }
        return d / std::sqrt(2.0 + x.norm_sq() + y.norm_sq() - 2.0 * std::sqrt(sum_sq));
    }
    if (p == 2.0 && G.kind() == DomainKind::half_space) {
        const double h = x.last() + y.last();
        return std::numbers::sqrt2 * d / std::sqrt(d * d + h * h);
    }
    complex_t u, v;
    Domain G2 = G;
    if (G.dim() == 2) {
        u = x.to_complex();
        v = y.to_complex();
    } else if (G.kind() == DomainKind::unit_ball) {
        std::tie(u, v) = detail::plane_through_origin(x, y);
        G2 = Domain::unit_ball(2);
    } else {
        std::tie(u, v) = detail::vertical_plane(x, y);
        G2 = Domain::half_space(2);
    }
    // the metric is similarity-invariant, so bring unbounded configurations
    // into the minimizer's working range first
    if (G2.kind() == DomainKind::sector)
        std::tie(u, v) = detail::normalize_sector_pair(u, v);
    else if (G2.kind() == DomainKind::half_space)
        std::tie(u, v) = detail::normalize_halfplane_pair(u, v);
    return detail::cabs(u - v) / detail::power_sum_infimum(G2, u, v, p);
}

/// Uniform dispatch over MetricKind.
inline double evaluate(const MetricKind& kind, const Domain& G, const Point& x, const Point& y) {
    switch (kind.tag) {
        case MetricKind::Tag::hyperbolic: return hyperbolic_distance(G, x, y);
        case MetricKind::Tag::distance_ratio: return distance_ratio_metric(G, x, y);
        case MetricKind::Tag::jstar: return jstar_metric(G, x, y);
        case MetricKind::Tag::triangular_ratio: return triangular_ratio_metric(G, x, y);
        case MetricKind::Tag::point_pair: return point_pair_function(G, x, y);
        case MetricKind::Tag::w_quasi: return w_quasi_metric(G, x, y);
        case MetricKind::Tag::t_metric: return t_metric(G, x, y);
        case MetricKind::Tag::barrlund: return barrlund_metric(G, kind.exponent, x, y);
    }
    throw unsupported_combination_error("evaluate: unknown metric kind");
}

}  // namespace metriclab
