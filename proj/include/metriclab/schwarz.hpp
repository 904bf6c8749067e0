// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Special functions of quasiconformal distortion theory (the complete
// elliptic integral K, the Groetzsch ring modulus mu and its inverse, the
// planar Groetzsch capacity, the Hersch-Pfluger distortion function
// phi_{K,2}) and the Schwarz-lemma bound evaluators for K-quasiregular and
// K-quasiconformal mappings built on them.

#pragma once

#include <cmath>
#include <limits>
#include <optional>

#include "metriclab/bounds.hpp"

namespace metriclab {

namespace detail {

// Arithmetic-geometric mean, iterated to |a - b| < 1e-15. Quadratic
// convergence: a handful of iterations even from (1, 1e-300).
inline double agm(double a, double b) {
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-15; ++i) {
        const double mid = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = mid;
    }
    return 0.5 * (a + b);
}

}  // namespace detail

/// Complete elliptic integral of the first kind with modulus r in [0, 1),
/// K(r) = integral_0^1 dx / sqrt((1-x^2)(1-r^2 x^2)) = pi / (2 AGM(1, r')).
inline double complete_elliptic_k(double r) {
    if (!(r >= 0.0) || r >= 1.0)
        throw invalid_parameter_error("complete_elliptic_k: modulus must lie in [0, 1)");
    const double rc = std::sqrt((1.0 - r) * (1.0 + r));
    return std::numbers::pi / (2.0 * detail::agm(1.0, rc));
}

/// Groetzsch ring modulus mu(r) = (pi/2) K(r') / K(r), r' = sqrt(1 - r^2);
/// strictly decreasing from +inf to 0 on (0, 1). Written on the AGM directly
/// so tiny r never forms the complementary modulus 1 - O(r^2) explicitly:
/// mu(r) = (pi/2) AGM(1, r') / AGM(1, r).
inline double grotzsch_mu(double r) {
    if (!(r > 0.0) || r >= 1.0)
        throw invalid_parameter_error("grotzsch_mu: argument must lie in (0, 1)");
    const double rc = std::sqrt((1.0 - r) * (1.0 + r));
    return 0.5 * std::numbers::pi * detail::agm(1.0, rc) / detail::agm(1.0, r);
}

/// Inverse of mu by bracketing bisection to |dr| < 1e-14. Arguments below 1
/// route through the functional identity mu(r) mu(r') = pi^2/4, which keeps
/// the bracket representable when the root is close to 1.
inline double grotzsch_mu_inverse(double y) {
    if (!(y > 0.0) || !std::isfinite(y))
        throw invalid_parameter_error("grotzsch_mu_inverse: argument must be positive");
    constexpr double quarter_pi_sq = std::numbers::pi * std::numbers::pi / 4.0;
    if (y < 1.0) {
        // the root may be closer to 1 than the largest double below it; that
        // largest double is then the correctly rounded interior answer
        const double rc = grotzsch_mu_inverse(quarter_pi_sq / y);
        const double r = std::sqrt((1.0 - rc) * (1.0 + rc));
        return std::min(r, std::nextafter(1.0, 0.0));
    }
    // mu(r) ~ log(4/r) for small r; beyond the bisection bracket the
    // asymptotic value is exact to far below the tolerance
    if (y > 300.0)
        return std::max(4.0 * std::exp(-y), std::numeric_limits<double>::denorm_min());
    // bisect on log(r): mu is logarithmic near 0, so this keeps the root
    // accurate in both the r and the mu sense
    double lo = std::log(1e-135);
    double hi = std::log1p(-1e-16);
    if (grotzsch_mu(std::exp(lo)) < y || grotzsch_mu(std::exp(hi)) > y)
        throw convergence_error("grotzsch_mu_inverse: failed to bracket the root");
    int iter = 0;
    while (hi - lo > 1e-15 * std::max(1.0, -lo)) {
        if (++iter > 200)
            throw convergence_error("grotzsch_mu_inverse: bisection budget exhausted");
        const double mid = 0.5 * (lo + hi);
        (grotzsch_mu(std::exp(mid)) > y ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

/// Planar Groetzsch capacity gamma_2(s) = 2*pi / mu(1/s), the decreasing
/// homeomorphism of (1, inf) onto (0, inf).
inline double grotzsch_capacity2(double s) {
    if (!(s > 1.0))
        throw invalid_parameter_error("grotzsch_capacity2: argument must exceed 1");
    return 2.0 * std::numbers::pi / grotzsch_mu(1.0 / s);
}

/// Hersch-Pfluger distortion function phi_{K,2}(r) = mu^{-1}(mu(r)/K) for
/// K > 0, an increasing homeomorphism of [0, 1] onto itself; phi_{1,2} is
/// the identity.
inline double hersch_pfluger_phi(double k, double r) {
    if (!(k > 0.0))
        throw invalid_parameter_error("hersch_pfluger_phi: K must be positive");
    if (!(r >= 0.0) || r > 1.0)
        throw invalid_parameter_error("hersch_pfluger_phi: argument must lie in [0, 1]");
    if (r == 0.0 || r == 1.0) return r;
    return grotzsch_mu_inverse(grotzsch_mu(r) / k);
}

struct SchwarzConstant {
    double value;         // c(K) = 2 arth(phi_{K,2}(th(1/2)))
    double linear_upper;  // v (K - 1) + K with v = log(2(1 + sqrt(1 - 1/e^2)))
};

/// The constant of the planar quasiregular Schwarz lemma; c(1) = 1 and
/// c(K) <= v(K-1) + K with v < 1.3507.
inline SchwarzConstant planar_schwarz_constant(double k) {
    if (!(k >= 1.0))
        throw invalid_parameter_error("planar_schwarz_constant: K >= 1 required");
    const double v = std::log(2.0 * (1.0 + std::sqrt(1.0 - std::exp(-2.0))));
    const double value = 2.0 * std::atanh(hersch_pfluger_phi(k, std::tanh(0.5)));
    return {value, v * (k - 1.0) + k};
}

/// Known range of the Groetzsch ring constant lambda_n: exactly 4 for n = 2,
/// and [4, 2 e^{n-1}) for n >= 3 (no closed form; evaluators use the upper
/// endpoint there, which can only weaken a bound).
inline Interval grotzsch_ring_constant_range(int n) {
    if (n < 2)
        throw invalid_parameter_error("grotzsch_ring_constant_range: n >= 2 required");
    if (n == 2) return {4.0, 4.0};
    return {4.0, 2.0 * std::exp(static_cast<double>(n - 1))};
}

/// Dilatation data of a K-quasiregular map: the bound K on both dilatations,
/// the inner dilatation K_I <= K, the dimension, and the Hoelder exponent
/// alpha <= K_I^{1/(1-n)} (smaller alpha weakens but never invalidates the
/// power-form bounds).
struct Dilatation {
    double k;
    double k_inner;
    int dim;
    double alpha;

    Dilatation(double k_, int dim_) : Dilatation(k_, k_, dim_) {}

    Dilatation(double k_, double k_inner_, int dim_)
        : Dilatation(k_, k_inner_, dim_, default_alpha(k_inner_, dim_)) {}

    Dilatation(double k_, double k_inner_, int dim_, double alpha_)
        : k(k_), k_inner(k_inner_), dim(dim_), alpha(alpha_) {
        if (!(k >= 1.0))
            throw invalid_parameter_error("Dilatation: K >= 1 required");
        if (!(k_inner >= 1.0) || k_inner > k)
            throw invalid_parameter_error("Dilatation: need 1 <= K_I <= K");
        if (dim < 2) throw invalid_parameter_error("Dilatation: n >= 2 required");
        if (!(alpha > 0.0) || alpha > default_alpha(k_inner, dim) * (1.0 + 1e-12))
            throw invalid_parameter_error("Dilatation: need 0 < alpha <= K_I^{1/(1-n)}");
    }

    static double default_alpha(double k_inner, int dim) {
        return std::pow(k_inner, 1.0 / (1.0 - dim));
    }

    static Dilatation conformal(int dim_) { return {1.0, dim_}; }
};

/// The Schwarz-lemma bounds on the hyperbolic distance of image points under
/// a K-quasiregular map between the ball and the half-space:
///   - rho_phi (planar): rho' <= 2 arth(phi_{K,2}(th(rho/2)));
///   - tanh_power: th(rho'/2) <= lambda_n^{1-alpha} th(rho/2)^alpha;
///   - rho_linear: rho' <= K_I (rho + log 4);
///   - rho_planar (planar): rho' <= c(K) max(rho, rho^{1/K}).
/// The planar forms also hold between any two simply connected planar
/// domains through Riemann maps onto the disk; they are exercised here on
/// the disk, the half-plane and sectors.
struct QuasiregularRhoBounds {
    std::optional<double> rho_phi;
    double tanh_power;
    double rho_linear;
    std::optional<double> rho_planar;
};

inline QuasiregularRhoBounds quasiregular_rho_bounds(const Dilatation& dil, double rho) {
    if (!(rho >= 0.0) || !std::isfinite(rho))
        throw invalid_parameter_error("quasiregular_rho_bounds: rho >= 0 required");
    const double th2 = std::tanh(0.5 * rho);
    const double lambda = grotzsch_ring_constant_range(dil.dim).upper;
    QuasiregularRhoBounds out{
        std::nullopt,
        std::pow(lambda, 1.0 - dil.alpha) * std::pow(th2, dil.alpha),
        dil.k_inner * (rho + std::log(4.0)),
        std::nullopt,
    };
    if (dil.dim == 2) {
        out.rho_phi = 2.0 * std::atanh(hersch_pfluger_phi(dil.k, th2));
        out.rho_planar = planar_schwarz_constant(dil.k).value *
                         std::max(rho, std::pow(rho, 1.0 / dil.k));
    }
    return out;
}

/// Bounds on d(f(x), f(y)) for d in {j*, w, s, p} under a K-quasiregular
/// self-map of the ball, from the metric value m = d(x, y):
///   - phi_bound (planar): phi_{K,2}(2m/(1+m^2));
///   - power_bound: lambda_n^{1-alpha} (2m/(1+m^2))^alpha;
///   - sharp_phi (planar): phi_{2K,2}(m^2), identical to phi_bound;
///   - sharp_power (planar): 4^{1-1/(2K)} m^{1/K}, sharp at K = 1.
struct QuasiregularMetricBounds {
    std::optional<double> phi_bound;
    double power_bound;
    std::optional<double> sharp_phi;
    std::optional<double> sharp_power;
};

inline QuasiregularMetricBounds quasiregular_metric_bounds(const Dilatation& dil,
                                                           double metric_value) {
    if (!(metric_value >= 0.0) || metric_value >= 1.0)
        throw invalid_parameter_error(
            "quasiregular_metric_bounds: metric value must lie in [0, 1)");
    const double m = metric_value;
    const double arg = 2.0 * m / (1.0 + m * m);
    const double lambda = grotzsch_ring_constant_range(dil.dim).upper;
    QuasiregularMetricBounds out{
        std::nullopt,
        std::pow(lambda, 1.0 - dil.alpha) * std::pow(arg, dil.alpha),
        std::nullopt,
        std::nullopt,
    };
    if (dil.dim == 2) {
        out.phi_bound = hersch_pfluger_phi(dil.k, arg);
        out.sharp_phi = hersch_pfluger_phi(2.0 * dil.k, m * m);
        out.sharp_power =
            std::pow(4.0, 1.0 - 0.5 / dil.k) * std::pow(m, 1.0 / dil.k);
    }
    return out;
}

/// The j*-against-point-pair Schwarz bound for a K-quasiregular self-map of
/// the ball. `lhs_form` is the j* expression |x-y|/(|x-y| + 2 - 2 max(|x|,|y|))
/// evaluated at the given points: called on image points it produces the left
/// side the other two fields bound. With y = 0 the argument reduces to
/// |x|(2-|x|)/(|x|^2-2|x|+2) and the left side to |x|/(2-|x|).
struct QuasiregularJstarBounds {
    double lhs_form;
    std::optional<double> phi_bound;
    double power_bound;
};

inline QuasiregularJstarBounds quasiregular_jstar_bounds(const Dilatation& dil,
                                                         const Point& x, const Point& y) {
    if (static_cast<int>(x.dim()) != dil.dim || static_cast<int>(y.dim()) != dil.dim)
        throw invalid_parameter_error(
            "quasiregular_jstar_bounds: point dimension must match the dilatation");
    const Domain ball = Domain::unit_ball(dil.dim);
    ball.require_member(x, "quasiregular_jstar_bounds");
    ball.require_member(y, "quasiregular_jstar_bounds");
    const double d = distance(x, y);
    const double prod = (1.0 - x.norm()) * (1.0 - y.norm());
    const double arg =
        (d == 0.0) ? 0.0
                   : d * std::sqrt(d * d + 4.0 * prod) / (d * d + 2.0 * prod);
    const double lambda = grotzsch_ring_constant_range(dil.dim).upper;
    QuasiregularJstarBounds out{
        jstar_metric(ball, x, y),
        std::nullopt,
        std::pow(lambda, 1.0 - dil.alpha) * std::pow(arg, dil.alpha),
    };
    if (dil.dim == 2) out.phi_bound = hersch_pfluger_phi(dil.k, arg);
    return out;
}

/// Two-sided bound on w_{S_beta}(f(x), f(y)) for a K-quasiconformal
/// f : S_alpha -> S_beta, from w = w_{S_alpha}(x, y):
///   beta w^K / (c(K)^K pi sin(beta/2)) <= w' <= c(K) (pi sin(alpha/2)/alpha)^{1/K} w^{1/K}.
inline Interval sector_quasiconformal_w_bounds(double k, double alpha, double beta,
                                               double w_value) {
    if (!(alpha > 0.0) || alpha > std::numbers::pi || !(beta > 0.0) ||
        beta > std::numbers::pi)
        throw invalid_parameter_error(
            "sector_quasiconformal_w_bounds: angles must lie in (0, pi]");
    if (!(w_value >= 0.0) || w_value >= 1.0)
        throw invalid_parameter_error(
            "sector_quasiconformal_w_bounds: w must lie in [0, 1)");
    const double c = planar_schwarz_constant(k).value;
    double lower = beta * std::pow(w_value, k) /
                   (std::pow(c, k) * std::numbers::pi * std::sin(0.5 * beta));
    double upper = c *
                   std::pow(std::numbers::pi * std::sin(0.5 * alpha) / alpha, 1.0 / k) *
                   std::pow(w_value, 1.0 / k);
    // K = 1 with alpha = beta pinches the interval to a point, where the
    // evaluation noise of c(K) can flip the endpoint order by an ulp
    if (lower > upper && lower - upper < 1e-12 * (1.0 + upper)) std::swap(lower, upper);
    return {lower, upper};
}

}  // namespace metriclab
