// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Sharp constants and bound intervals: each metric against th(rho/2) on
// radius windows of the ball, fixed conformal-distortion constants between
// the ball and the half-space, windowed conformal-distortion bounds, the
// hyperbolic-midpoint rotation bounds for the triangular ratio metric, and
// the sector power-map constant for the w quasi-metric.

#pragma once

#include <cmath>

#include "metriclab/metrics.hpp"

namespace metriclab {

/// A closed interval [lower, upper] of nonnegative reals.
struct Interval {
    double lower;
    double upper;

    Interval(double lo, double hi) : lower(lo), upper(hi) {
        if (!(std::isfinite(lo) && std::isfinite(hi)) || lo < 0.0 || lo > hi)
            throw invalid_parameter_error("Interval: need 0 <= lower <= upper, both finite");
    }

    bool contains(double v, double slack = 0.0) const {
        return v >= lower - slack && v <= upper + slack;
    }
};

/// Radius window [r_lower, r_upper] inside [0, 1) constraining |x| and |y|.
struct RadiusWindow {
    double r_lower;
    double r_upper;

    RadiusWindow(double lo, double hi) : r_lower(lo), r_upper(hi) {
        if (!(lo >= 0.0) || lo > hi || !(hi < 1.0))
            throw invalid_parameter_error("RadiusWindow: need 0 <= r_lower <= r_upper < 1");
    }
};

/// The root of 1 - 3r - r^2 - r^3 in (0, 1), from the cubic formula;
/// approximately 0.2955977425. Below this radius the lower constant for j*
/// against th(rho/2) is (1+r^2)/2, above it (1+r)/sqrt(5+2r+r^2): the cubic
/// changes sign here and the two expressions touch.
inline double jstar_threshold() {
    const double c = std::cbrt(48.0 * std::sqrt(33.0) + 208.0);
    return c / 6.0 - 16.0 / (3.0 * c) - 1.0 / 3.0;
}

namespace detail {

inline double jstar_lower_plain(double r) {
    return (1.0 + r) / std::sqrt(5.0 + 2.0 * r + r * r);
}

inline double jstar_lower_piecewise(double r) {
    return r < jstar_threshold() ? 0.5 * (1.0 + r * r) : jstar_lower_plain(r);
}

inline double point_pair_upper(double r) {
    return (1.0 + r * r) / (2.0 * std::sqrt(1.0 - 2.0 * r + 2.0 * r * r));
}

// Constants (c_low, c_up) with c_low * th(rho/2) <= d <= c_up * th(rho/2) on
// the window; `piecewise` switches the j*/s/w lower constant to its
// threshold-aware refinement.
inline Interval half_rho_constants(const MetricKind& kind, const RadiusWindow& w,
                                   bool piecewise) {
    const double rl = w.r_lower;
    const double ru = w.r_upper;
    auto jlow = piecewise ? jstar_lower_piecewise : jstar_lower_plain;
    switch (kind.tag) {
        case MetricKind::Tag::t_metric:
            return {0.5, 0.5 * (1.0 + ru)};
        case MetricKind::Tag::jstar:
            return {jlow(rl), 0.5 * (1.0 + ru)};
        case MetricKind::Tag::point_pair:
            return {0.5 * (1.0 + rl), point_pair_upper(ru)};
        case MetricKind::Tag::barrlund:
            if (kind.exponent != 2.0)
                throw unsupported_combination_error(
                    "half-rho constants for the Barrlund metric require p = 2");
            // both endpoints through one sqrt form so a degenerate window
            // r_l = r_u = 0 pinches to an exactly equal pair
            return {std::sqrt(0.5 * (1.0 + rl * rl)),
                    std::sqrt(0.5 * (1.0 + ru) * (1.0 + ru))};
        case MetricKind::Tag::triangular_ratio:
        case MetricKind::Tag::w_quasi:
            return {jlow(rl), point_pair_upper(ru)};
        default:
            throw unsupported_combination_error(
                "no half-rho constants for this metric kind");
    }
}

}  // namespace detail

/// Best constants (c_low, c_up) with
///   c_low * th(rho_B(x,y)/2) <= d_B(x,y) <= c_up * th(rho_B(x,y)/2)
/// for all ball points with |x|, |y| in the window. Supported kinds:
/// t, j*, p, Barrlund (p = 2), s, w.
inline Interval ratio_bounds_vs_half_rho(const MetricKind& kind, const RadiusWindow& w) {
    // the j* lower constant is stated threshold-aware; s and w keep the
    // plain form their corollary displays
    const bool piecewise = kind.tag == MetricKind::Tag::jstar;
    return detail::half_rho_constants(kind, w, piecewise);
}

/// th(rho/2) <= b_{H,2} <= sqrt(2) th(rho/2) on the half-space.
inline Interval halfspace_barrlund_bounds() {
    return {1.0, std::numbers::sqrt2};
}

/// Quotient interval for d(f(x), f(y)) / d(x, y) under a conformal map
/// between the half-space and the ball (in either combination), valid for
/// all point pairs. Supported kinds: t, j*, w, s, p, Barrlund (p = 2).
inline Interval fixed_conformal_constants(const MetricKind& kind, DomainKind from,
                                          DomainKind to) {
    if (from == DomainKind::sector || to == DomainKind::sector)
        throw unsupported_combination_error(
            "fixed conformal constants cover the half-space and the ball only");
    const bool h2h = from == DomainKind::half_space && to == DomainKind::half_space;
    const bool h2b = from == DomainKind::half_space && to == DomainKind::unit_ball;
    const bool b2h = from == DomainKind::unit_ball && to == DomainKind::half_space;
    constexpr double rt2 = std::numbers::sqrt2;
    switch (kind.tag) {
        case MetricKind::Tag::t_metric:
            return {0.5, 2.0};
        case MetricKind::Tag::jstar:
            // the sqrt(2) bound holds on H -> H; applying it to the inverse
            // map gives the matching lower constant
            if (h2h) return {1.0 / rt2, rt2};
            return {0.5, 2.0};
        case MetricKind::Tag::w_quasi:
        case MetricKind::Tag::triangular_ratio:
        case MetricKind::Tag::point_pair:
            // these three equal th(rho/2) on the half-space
            if (h2h) return {1.0, 1.0};
            if (h2b) return {0.5, 1.0};
            if (b2h) return {1.0, 2.0};
            return {0.5, 2.0};
        case MetricKind::Tag::barrlund:
            if (kind.exponent != 2.0)
                throw unsupported_combination_error(
                    "fixed conformal constants for the Barrlund metric require p = 2");
            if (h2h) return {1.0 / rt2, rt2};
            if (h2b) return {0.5, rt2};
            if (b2h) return {1.0 / rt2, 2.0};
            return {0.5, 2.0};
        default:
            throw unsupported_combination_error(
                "no fixed conformal constants for this metric kind");
    }
}

/// Quotient interval for d(f(x), f(y)) / d(x, y) under a conformal self-map
/// of the ball, given |x|, |y| in `source` and |f(x)|, |f(y)| in `image`.
/// With `refined` set, the j*/s/w lower constants use the threshold-aware
/// refinement below the j* threshold; the default reproduces the displayed
/// windowed constants.
inline Interval conformal_distortion_bounds(const MetricKind& kind,
                                            const RadiusWindow& source,
                                            const RadiusWindow& image,
                                            bool refined = false) {
    const Interval src = detail::half_rho_constants(kind, source, refined);
    const Interval img = detail::half_rho_constants(kind, image, refined);
    return {img.lower / src.upper, img.upper / src.lower};
}

/// Bounds on s_B(x, y) itself in terms of the absolute value q of the
/// hyperbolic midpoint of x, y and t = th(rho_B(x,y)/4); x and y lie on the
/// hyperbolic sphere of center q and radius parameter t and the bounds are
/// attained by rotating the pair on that sphere.
inline Interval midpoint_rotation_s_bounds(double q, double t) {
    if (!(q >= 0.0) || q >= 1.0 || !(t > 0.0) || t >= 1.0)
        throw invalid_parameter_error(
            "midpoint_rotation_s_bounds: need 0 <= q < 1 and 0 < t < 1");
    const double upper = (1.0 + q) * t / (1.0 + q * t * t);
    const double lower =
        (q < t * t)
            ? std::sqrt((q * q + t * t) / (1.0 + q * q * t * t))
            : t * (1.0 + q) / std::sqrt((1.0 + t * t) * (1.0 + q * q * t * t));
    return {lower, upper};
}

/// Bounds (l, u) on s_B(f(x), f(y)) / s_B(x, y) for a conformal self-map of
/// the ball, in terms of the midpoint modulus q and t = th(rho(x,y)/4).
/// Both branches of u meet continuously at q = t^2, and always
/// 1/2 < l <= 1 <= u < 2. q = 1 is accepted as the limiting row.
inline Interval s_quotient_bounds(double q, double t) {
    if (!(q >= 0.0) || q > 1.0 || !(t > 0.0) || t >= 1.0)
        throw invalid_parameter_error("s_quotient_bounds: need 0 <= q <= 1 and 0 < t < 1");
    const double l = (1.0 + q * t * t) / (1.0 + q);
    const double u =
        (q < t * t)
            ? (2.0 * t / (1.0 + t * t)) * std::sqrt((1.0 + q * q * t * t) / (q * q + t * t))
            : (2.0 / (1.0 + q)) * std::sqrt((1.0 + q * q * t * t) / (1.0 + t * t));
    return {l, u};
}

/// The midpoint-free relaxation of s_quotient_bounds:
/// (1+t^2)/2 <= s(f(x),f(y))/s(x,y) <= 2/(1+t^2), containing every
/// s_quotient_bounds(q, t) interval.
inline Interval s_quotient_bounds_midpoint_free(double t) {
    if (!(t > 0.0) || t >= 1.0)
        throw invalid_parameter_error("s_quotient_bounds_midpoint_free: need 0 < t < 1");
    return {0.5 * (1.0 + t * t), 2.0 / (1.0 + t * t)};
}

/// Sharp interval for w_{S_beta}(f(x), f(y)) / w_{S_alpha}(x, y) under the
/// power map f(z) = z^{beta/alpha}, for 0 < alpha <= beta <= pi:
/// (1, beta sin(alpha/2) / (alpha sin(beta/2))).
inline Interval sector_w_power_bounds(double alpha, double beta) {
    if (!(alpha > 0.0) || !(alpha <= beta) || beta > std::numbers::pi)
        throw invalid_parameter_error(
            "sector_w_power_bounds: need 0 < alpha <= beta <= pi");
    return {1.0, beta * std::sin(0.5 * alpha) / (alpha * std::sin(0.5 * beta))};
}

}  // namespace metriclab
