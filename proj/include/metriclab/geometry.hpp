// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Domains (upper half-space, unit ball, planar sector), boundary distance,
// nearest-boundary-point sets, the Ahlfors bracket, and a guaranteed-accuracy
// one-dimensional minimizer over domain boundaries.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "metriclab/errors.hpp"

namespace metriclab {

using complex_t = std::complex<double>;

namespace detail {

inline double norm_sq(complex_t z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

// |z| without the overflow guards of std::abs(complex); all operands here are O(1).
inline double cabs(complex_t z) {
    return std::sqrt(norm_sq(z));
}

// Principal argument folded to [0, 2*pi).
inline double folded_argument(complex_t z) {
    double a = std::atan2(z.imag(), z.real());
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    return a;
}

}  // namespace detail

/// A point of R^n, n >= 2, with finite binary64 coordinates.
class Point {
public:
    explicit Point(std::vector<double> coords) : coords_(std::move(coords)) { validate(); }

    Point(double x, double y) : coords_{x, y} { validate(); }

    static Point from_complex(complex_t z) { return Point(z.real(), z.imag()); }

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<double>& coords() const { return coords_; }

    /// Last coordinate; the height above the half-space boundary.
    double last() const { return coords_.back(); }

    double norm_sq() const {
        double s = 0.0;
        for (double c : coords_) s += c * c;
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    complex_t to_complex() const {
        if (coords_.size() != 2)
            throw unsupported_dimension_error("Point::to_complex requires n = 2");
        return {coords_[0], coords_[1]};
    }

private:
    void validate() const {
        if (coords_.size() < 2)
            throw invalid_parameter_error("a point needs at least two coordinates");
        for (double c : coords_) {
            if (!std::isfinite(c))
                throw invalid_parameter_error("point coordinates must be finite");
        }
    }

    std::vector<double> coords_;
};

inline bool operator==(const Point& a, const Point& b) {
    return a.coords() == b.coords();
}
inline bool operator!=(const Point& a, const Point& b) { return !(a == b); }

inline double distance(const Point& a, const Point& b) {
    if (a.dim() != b.dim())
        throw invalid_parameter_error("points of different dimension");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

enum class DomainKind { half_space, unit_ball, sector };

/// One of the three canonical domains: H^n (last coordinate positive),
/// B^n (unit ball), or the planar sector S_theta = { 0 < arg z < theta }.
class Domain {
public:
    static Domain half_space(int n = 2) { return Domain(DomainKind::half_space, n, 0.0); }
    static Domain unit_ball(int n = 2) { return Domain(DomainKind::unit_ball, n, 0.0); }

    /// Sector with opening angle theta in (0, 2*pi); always planar.
    static Domain sector(double theta) { return Domain(DomainKind::sector, 2, theta); }

    DomainKind kind() const { return kind_; }
    int dim() const { return dim_; }

    double angle() const {
        if (kind_ != DomainKind::sector)
            throw unsupported_combination_error("angle() is defined for sectors only");
        return angle_;
    }

    bool is_convex() const {
        return kind_ != DomainKind::sector || angle_ <= std::numbers::pi;
    }

    bool contains(const Point& x) const {
        if (static_cast<int>(x.dim()) != dim_) return false;
        switch (kind_) {
            case DomainKind::half_space:
                return x.last() > 0.0;
            case DomainKind::unit_ball:
                return x.norm_sq() < 1.0;
            case DomainKind::sector: {
                if (x[0] == 0.0 && x[1] == 0.0) return false;
                double a = detail::folded_argument({x[0], x[1]});
                return a > 0.0 && a < angle_;
            }
        }
        return false;
    }

    void require_member(const Point& x, const char* where) const {
        if (!contains(x))
            throw domain_membership_error(std::string(where) + ": point is not in the domain");
    }

    std::string name() const {
        switch (kind_) {
            case DomainKind::half_space: return "half" + std::to_string(dim_);
            case DomainKind::unit_ball: return "ball" + std::to_string(dim_);
            case DomainKind::sector: return "sector:" + std::to_string(angle_);
        }
        return "?";
    }

private:
    Domain(DomainKind k, int n, double theta) : kind_(k), dim_(n), angle_(theta) {
        if (n < 2) throw invalid_parameter_error("domain dimension must be at least 2");
        if (k == DomainKind::sector) {
            if (n != 2) throw invalid_parameter_error("sectors are planar (n = 2)");
            if (!(theta > 0.0) || !(theta < 2.0 * std::numbers::pi))
                throw invalid_parameter_error("sector angle must lie in (0, 2*pi)");
        }
    }

    DomainKind kind_;
    int dim_;
    double angle_;
};

namespace detail {

// Distance from z to the ray { t*e^{i*angle} : t >= 0 }: perpendicular distance
// when the foot lands on the ray, distance to the vertex otherwise.
inline double ray_distance(complex_t z, double angle) {
    const complex_t dir{std::cos(angle), std::sin(angle)};
    const double t = z.real() * dir.real() + z.imag() * dir.imag();
    if (t <= 0.0) return cabs(z);
    return cabs(z - t * dir);
}

// Closest point of the ray to z (the foot of the perpendicular, clamped to the vertex).
inline complex_t ray_foot(complex_t z, double angle) {
    const complex_t dir{std::cos(angle), std::sin(angle)};
    const double t = z.real() * dir.real() + z.imag() * dir.imag();
    if (t <= 0.0) return {0.0, 0.0};
    return t * dir;
}

}  // namespace detail

/// Euclidean distance from x to the boundary of the domain. Strictly positive
/// for interior points.
inline double boundary_distance(const Domain& G, const Point& x) {
    G.require_member(x, "boundary_distance");
    switch (G.kind()) {
        case DomainKind::half_space:
            return x.last();
        case DomainKind::unit_ball:
            return 1.0 - x.norm();
        case DomainKind::sector: {
            const complex_t z = x.to_complex();
            return std::min(detail::ray_distance(z, 0.0),
                            detail::ray_distance(z, G.angle()));
        }
    }
    return 0.0;
}

/// All boundary points realizing boundary_distance(G, x). Half-space and ball
/// yield exactly one point; a convex sector yields one or two (two on the
/// bisector). Only defined on convex domains, and for the ball only away from
/// the center (every sphere point is nearest to the center).
inline std::vector<Point> nearest_boundary_points(const Domain& G, const Point& x) {
    G.require_member(x, "nearest_boundary_points");
    if (!G.is_convex())
        throw non_convex_domain_error("nearest_boundary_points: sector wider than pi");
    switch (G.kind()) {
        case DomainKind::half_space: {
            std::vector<double> c = x.coords();
            c.back() = 0.0;
            return {Point(std::move(c))};
        }
        case DomainKind::unit_ball: {
            const double r = x.norm();
            if (r == 0.0)
                throw invalid_parameter_error(
                    "nearest_boundary_points: the ball center has the whole sphere as its nearest set");
            std::vector<double> c = x.coords();
            for (double& v : c) v /= r;
            return {Point(std::move(c))};
        }
        case DomainKind::sector: {
            const complex_t z = x.to_complex();
            const complex_t f0 = detail::ray_foot(z, 0.0);
            const complex_t f1 = detail::ray_foot(z, G.angle());
            const double d0 = detail::cabs(z - f0);
            const double d1 = detail::cabs(z - f1);
            const double dmin = std::min(d0, d1);
            const double tol = dmin * 1e-12;
            std::vector<Point> out;
            if (d0 <= dmin + tol) out.push_back(Point::from_complex(f0));
            if (d1 <= dmin + tol && detail::cabs(f1 - f0) > tol)
                out.push_back(Point::from_complex(f1));
            return out;
        }
    }
    return {};
}

/// Ahlfors bracket A[x, y] = sqrt(|x-y|^2 + (1-|x|^2)(1-|y|^2)) for points of
/// the unit ball; the denominator of th(rho_B/2) in the plane.
inline double ahlfors_bracket(const Point& x, const Point& y) {
    if (x.norm_sq() >= 1.0 || y.norm_sq() >= 1.0)
        throw domain_membership_error("ahlfors_bracket: points must lie in the unit ball");
    const double d = distance(x, y);
    const double sx = (1.0 - x.norm()) * (1.0 + x.norm());
    const double sy = (1.0 - y.norm()) * (1.0 + y.norm());
    return std::sqrt(d * d + sx * sy);
}

// ---------------------------------------------------------------------------
// One-dimensional boundary minimization.
//
// Scheme: a coarse scan of 4096 boundary samples, then golden-section
// refinement of the three best brackets until the parameter interval is
// below 1e-14. The half-space boundary (a line) and the sector rays are
// compactified with u -> tan(u) before scanning.
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr int boundary_scan_samples = 4096;
inline constexpr double refine_param_tol = 1e-14;
inline constexpr int refine_max_iter = 256;

struct ParamMin {
    double param = 0.0;
    double value = std::numeric_limits<double>::infinity();
};

// Golden-section search on [a, b]; keeps the best point seen, which can be an
// endpoint when the function is monotone on the bracket.
template <class G>
ParamMin golden_refine(G&& g, double a, double b, ParamMin best) {
    constexpr double invphi = 0.61803398874989484820;
    auto consider = [&best](double u, double fu) {
        if (fu < best.value) best = {u, fu};
    };
    consider(a, g(a));
    consider(b, g(b));
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = g(x1);
    double f2 = g(x2);
    consider(x1, f1);
    consider(x2, f2);
    int iter = 0;
    while (b - a > refine_param_tol) {
        if (++iter > refine_max_iter)
            throw convergence_error("boundary minimizer: refinement budget exhausted");
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = g(x1);
            consider(x1, f1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = g(x2);
            consider(x2, f2);
        }
    }
    return best;
}

inline const std::vector<complex_t>& unit_circle_table() {
    static const std::vector<complex_t> table = [] {
        std::vector<complex_t> t(boundary_scan_samples);
        const double step = 2.0 * std::numbers::pi / boundary_scan_samples;
        for (int i = 0; i < boundary_scan_samples; ++i)
            t[i] = {std::cos(step * i), std::sin(step * i)};
        return t;
    }();
    return table;
}

// Indices of the (up to) three smallest local minima of f.
inline void best_local_minima(const std::vector<double>& f, bool periodic, int (&out)[3], int& count) {
    const int n = static_cast<int>(f.size());
    count = 0;
    auto offer = [&](int i) {
        if (count < 3) {
            out[count++] = i;
        } else {
            int worst = 0;
            for (int k = 1; k < 3; ++k)
                if (f[out[k]] > f[out[worst]]) worst = k;
            if (f[i] < f[out[worst]]) out[worst] = i;
        }
    };
    for (int i = 0; i < n; ++i) {
        const double left = (i > 0) ? f[i - 1] : (periodic ? f[n - 1] : f[i] + 1.0);
        const double right = (i + 1 < n) ? f[i + 1] : (periodic ? f[0] : f[i] + 1.0);
        if (f[i] <= left && f[i] <= right) offer(i);
    }
    if (count == 0) {  // monotone sequence on an interval: take the smaller end
        offer(f.front() <= f.back() ? 0 : n - 1);
    }
}

template <class Cost>
ParamMin minimize_on_circle(Cost&& cost) {
    const auto& pts = unit_circle_table();
    const int n = boundary_scan_samples;
    const double step = 2.0 * std::numbers::pi / n;
    thread_local std::vector<double> f;
    f.resize(n);
    for (int i = 0; i < n; ++i) f[i] = cost(pts[i]);
    int idx[3];
    int count = 0;
    best_local_minima(f, /*periodic=*/true, idx, count);
    auto g = [&](double phi) { return cost(complex_t{std::cos(phi), std::sin(phi)}); };
    ParamMin best;
    for (int k = 0; k < count; ++k) {
        const int i = idx[k];
        ParamMin seed{step * i, f[i]};
        best = golden_refine(g, step * (i - 1), step * (i + 1),
                             seed.value < best.value ? seed : best);
    }
    if (best.param < 0.0) best.param += 2.0 * std::numbers::pi;
    return best;
}

struct ParamTable {
    std::vector<double> params;  // compactified parameter u
    std::vector<double> values;  // tan(u), cached for the scan
};

inline const ParamTable& line_param_table() {
    static const ParamTable table = [] {
        ParamTable t;
        const int n = boundary_scan_samples;
        t.params.resize(n);
        t.values.resize(n);
        for (int i = 0; i < n; ++i) {
            t.params[i] = -0.5 * std::numbers::pi + std::numbers::pi * (i + 0.5) / n;
            t.values[i] = std::tan(t.params[i]);
        }
        return t;
    }();
    return table;
}

inline const ParamTable& ray_param_table() {
    static const ParamTable table = [] {
        ParamTable t;
        const int n = boundary_scan_samples;
        t.params.resize(n);
        t.values.resize(n);
        for (int i = 0; i < n; ++i) {
            t.params[i] = 0.5 * std::numbers::pi * i / n;  // includes the vertex u = 0
            t.values[i] = std::tan(t.params[i]);
        }
        return t;
    }();
    return table;
}

// Minimize over a tan-compactified grid: the scan consumes the cached
// tan values, the refinement re-evaluates through the parameterization.
template <class Cost, class PointOf>
ParamMin minimize_on_table(Cost&& cost, PointOf&& point_of, const ParamTable& table) {
    const auto& nodes = table.params;
    const int n = static_cast<int>(nodes.size());
    thread_local std::vector<double> f;
    f.resize(n);
    for (int i = 0; i < n; ++i) f[i] = cost(point_of(table.values[i]));
    int idx[3];
    int count = 0;
    best_local_minima(f, /*periodic=*/false, idx, count);
    auto g = [&](double u) { return cost(point_of(std::tan(u))); };
    ParamMin best;
    for (int k = 0; k < count; ++k) {
        const int i = idx[k];
        const double a = nodes[std::max(0, i - 1)];
        const double b = nodes[std::min(n - 1, i + 1)];
        ParamMin seed{nodes[i], f[i]};
        best = golden_refine(g, a, b, seed.value < best.value ? seed : best);
    }
    return best;
}

struct BoundaryMin2D {
    double value;
    complex_t argmin;
};

// Core 2D dispatch shared with the metrics module; Cost maps a boundary point
// (as a complex number) to the value being minimized.
template <class Cost>
BoundaryMin2D boundary_infimum_2d(const Domain& G, Cost&& cost) {
    switch (G.kind()) {
        case DomainKind::unit_ball: {
            if (G.dim() != 2)
                throw unsupported_dimension_error("boundary minimizer: planar domains only");
            ParamMin m = minimize_on_circle(cost);
            return {m.value, complex_t{std::cos(m.param), std::sin(m.param)}};
        }
        case DomainKind::half_space: {
            if (G.dim() != 2)
                throw unsupported_dimension_error("boundary minimizer: planar domains only");
            auto point_of = [](double x) { return complex_t{x, 0.0}; };
            ParamMin m = minimize_on_table(cost, point_of, line_param_table());
            return {m.value, complex_t{std::tan(m.param), 0.0}};
        }
        case DomainKind::sector: {
            const double theta = G.angle();
            const complex_t d0{1.0, 0.0};
            const complex_t d1{std::cos(theta), std::sin(theta)};
            auto on_d0 = [d0](double r) { return r * d0; };
            auto on_d1 = [d1](double r) { return r * d1; };
            ParamMin m0 = minimize_on_table(cost, on_d0, ray_param_table());
            ParamMin m1 = minimize_on_table(cost, on_d1, ray_param_table());
            if (m0.value <= m1.value) return {m0.value, std::tan(m0.param) * d0};
            return {m1.value, std::tan(m1.param) * d1};
        }
    }
    throw unsupported_combination_error("boundary minimizer: unknown domain");
}

}  // namespace detail

struct BoundaryMin {
    double value;
    Point argmin;
};

/// Minimize a continuous cost over the boundary of a planar domain. Returns a
/// value within 1e-12 of the infimum together with a minimizing boundary
/// point. The cost must attain its infimum within the compactified scan range
/// of the unbounded boundaries; the broken-path and power-sum costs used by
/// the metrics always do.
inline BoundaryMin boundary_cost_infimum(const Domain& G,
                                         const std::function<double(const Point&)>& cost) {
    auto r = detail::boundary_infimum_2d(
        G, [&cost](complex_t z) { return cost(Point::from_complex(z)); });
    return {r.value, Point::from_complex(r.argmin)};
}

}  // namespace metriclab
