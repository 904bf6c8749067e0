// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Seeded experiments: uniform disk sampling, the supremum estimate for the
// disk-automorphism distortion constant, the Monte Carlo comparison of the
// two conformal-distortion bound methods for the triangular ratio metric,
// the inequality fuzzer, and the l/u bound-surface grid.
//
// Every experiment derives one random stream per trial from (seed, trial
// index), and all reductions are exact (integer sums, floating-point max,
// order-restored concatenation), so results are bit-identical for a given
// seed regardless of the number of worker threads.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "metriclab/bounds.hpp"
#include "metriclab/metrics.hpp"
#include "metriclab/moebius.hpp"
#include "metriclab/rng.hpp"

namespace metriclab {

/// Number of worker threads experiments may use: the METRICS_LAB_THREADS
/// environment variable when set to a positive integer, hardware concurrency
/// otherwise (0 or unset means auto).
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const char* env = std::getenv("METRICS_LAB_THREADS");
    if (!env || !*env) return hw;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return hw;
    return static_cast<unsigned>(std::min<unsigned long>(v, 256));
}

namespace detail {

// Runs per_trial(t, partial) for t in [0, trials) across workers, then folds
// the per-worker partials in worker order. Deterministic for any worker
// count as long as the fold is associative and commutative in exact
// arithmetic (or order is restored afterwards, as the fuzzer does).
template <class Partial, class PerTrial, class Merge>
Partial run_trials(std::uint64_t trials, Partial init, PerTrial per_trial, Merge merge) {
    unsigned workers = worker_count();
    if (trials < 256 || workers <= 1) {
        Partial acc = std::move(init);
        for (std::uint64_t t = 0; t < trials; ++t) per_trial(t, acc);
        return acc;
    }
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, trials));
    std::vector<Partial> parts(workers, init);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = trials * w / workers;
        const std::uint64_t hi = trials * (w + 1) / workers;
        pool.emplace_back([&, w, lo, hi] {
            try {
                for (std::uint64_t t = lo; t < hi; ++t) per_trial(t, parts[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Partial acc = std::move(parts[0]);
    for (unsigned w = 1; w < workers; ++w) merge(acc, parts[w]);
    return acc;
}

}  // namespace detail

/// Uniform sample from the open unit disk by rejection from the square
/// [-1, 1]^2; sampling (radius, angle) uniformly would not be uniform in
/// area. Acceptance rate is pi/4.
inline complex_t sample_unit_disk(TrialRng& rng) {
    for (;;) {
        const double re = rng.next_symmetric();
        const double im = rng.next_symmetric();
        if (re * re + im * im < 1.0) return {re, im};
    }
}

/// Random point of a domain: disk rejection for the planar ball and sector,
/// cube rejection for higher-dimensional balls, a unit box for the
/// half-space.
inline Point sample_point(const Domain& G, TrialRng& rng) {
    switch (G.kind()) {
        case DomainKind::unit_ball: {
            const int n = G.dim();
            if (n == 2) return Point::from_complex(sample_unit_disk(rng));
            std::vector<double> c(n);
            for (;;) {
                double s = 0.0;
                for (double& v : c) {
                    v = rng.next_symmetric();
                    s += v * v;
                }
                if (s < 1.0) return Point(c);
            }
        }
        case DomainKind::half_space: {
            std::vector<double> c(G.dim());
            for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i] = rng.next_symmetric();
            double h = rng.next_unit();
            while (h == 0.0) h = rng.next_unit();
            c.back() = h;
            return Point(std::move(c));
        }
        case DomainKind::sector: {
            for (;;) {
                const complex_t z = sample_unit_disk(rng);
                const Point p = Point::from_complex(z);
                if (G.contains(p)) return p;
            }
        }
    }
    throw unsupported_combination_error("sample_point: unknown domain");
}

/// Estimate of sup_{x,y} d(T_a x, T_a y) / d(x, y) over the disk, combining
/// seeded random pairs with the directed probe x = k e^{i arg a}, y = -x for
/// k in {1e-2, 1e-3, 1e-4} whose limit value is 1 + |a|. The running maximum
/// is non-decreasing in the trial count.
inline double sup_distortion_estimate(complex_t a, const MetricKind& kind,
                                      std::uint64_t trials, std::uint64_t seed) {
    if (detail::norm_sq(a) >= 1.0)
        throw domain_membership_error("sup_distortion_estimate: |a| < 1 required");
    switch (kind.tag) {
        case MetricKind::Tag::t_metric:
        case MetricKind::Tag::jstar:
        case MetricKind::Tag::w_quasi:
        case MetricKind::Tag::triangular_ratio:
        case MetricKind::Tag::point_pair:
            break;
        case MetricKind::Tag::barrlund:
            if (kind.exponent == 2.0) break;
            [[fallthrough]];
        default:
            throw invalid_parameter_error(
                "sup_distortion_estimate: supported kinds are t, j*, w, s, p, Barrlund-2");
    }
    const Domain disk = Domain::unit_ball(2);
    const MoebiusMap map = MoebiusMap::disk_automorphism(a);
    auto quotient = [&](complex_t x, complex_t y) {
        const Point px = Point::from_complex(x);
        const Point py = Point::from_complex(y);
        const double den = evaluate(kind, disk, px, py);
        const Point qx = Point::from_complex(map.apply(x));
        const Point qy = Point::from_complex(map.apply(y));
        return evaluate(kind, disk, qx, qy) / den;
    };

    const double mu = (a == complex_t{0.0, 0.0}) ? 0.0 : std::atan2(a.imag(), a.real());
    double best = 0.0;
    for (double k : {1e-2, 1e-3, 1e-4}) {
        const complex_t x = std::polar(k, mu);
        best = std::max(best, quotient(x, -x));
    }
    const double random_best = detail::run_trials<double>(
        trials, 0.0,
        [&](std::uint64_t trial, double& acc) {
            TrialRng rng(seed, trial);
            complex_t x = sample_unit_disk(rng);
            complex_t y = sample_unit_disk(rng);
            while (x == y) y = sample_unit_disk(rng);
            acc = std::max(acc, quotient(x, y));
        },
        [](double& acc, double part) { acc = std::max(acc, part); });
    return std::max(best, random_best);
}

/// Tally of the Monte Carlo comparison between the windowed
/// conformal-distortion bounds (with the exact image radii of the disk
/// automorphism) and the hyperbolic-midpoint bounds, for the triangular
/// ratio metric. "Better" means strictly better on the named endpoint.
struct ComparisonSummary {
    std::uint64_t total = 0;
    std::uint64_t both_better = 0;
    std::uint64_t lower_better = 0;
    std::uint64_t upper_better = 0;
    std::uint64_t seed = 0;
};

inline bool operator==(const ComparisonSummary& a, const ComparisonSummary& b) {
    return a.total == b.total && a.both_better == b.both_better &&
           a.lower_better == b.lower_better && a.upper_better == b.upper_better &&
           a.seed == b.seed;
}

inline ComparisonSummary compare_bound_methods(std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1)
        throw invalid_parameter_error("compare_bound_methods: trials >= 1 required");
    struct Counts {
        std::uint64_t both = 0, lower = 0, upper = 0;
    };
    const Domain disk = Domain::unit_ball(2);
    const MetricKind s = MetricKind::triangular_ratio();
    const Counts sum = detail::run_trials<Counts>(
        trials, Counts{},
        [&](std::uint64_t trial, Counts& acc) {
            TrialRng rng(seed, trial);
            complex_t a, x, y;
            do {  // a degenerate pair (measure zero) redraws the trial
                a = sample_unit_disk(rng);
                x = sample_unit_disk(rng);
                y = sample_unit_disk(rng);
            } while (x == y);
            if (detail::norm_sq(x) > detail::norm_sq(y)) std::swap(x, y);
            const double rl = detail::cabs(x);
            const double ru = detail::cabs(y);
            const RadiusWindow image{disk_image_radii(a, rl).inner,
                                     disk_image_radii(a, ru).outer};
            const Interval windowed =
                conformal_distortion_bounds(s, RadiusWindow{rl, ru}, image);
            const Point px = Point::from_complex(x);
            const Point py = Point::from_complex(y);
            const double rho = hyperbolic_distance(disk, px, py);
            const double q = hyperbolic_midpoint(px, py).norm();
            const Interval midpoint = s_quotient_bounds(q, std::tanh(0.25 * rho));
            const bool lower = midpoint.lower > windowed.lower;
            const bool upper = midpoint.upper < windowed.upper;
            acc.lower += lower;
            acc.upper += upper;
            acc.both += lower && upper;
        },
        [](Counts& acc, const Counts& part) {
            acc.both += part.both;
            acc.lower += part.lower;
            acc.upper += part.upper;
        });
    return {trials, sum.both, sum.lower, sum.upper, seed};
}

struct Violation {
    std::uint64_t trial;
    std::string name;
    double lhs;
    double rhs;
};

struct FuzzReport {
    std::uint64_t trials = 0;
    std::uint64_t checks = 0;
    std::uint64_t seed = 0;
    std::vector<Violation> violations;
};

namespace detail {

struct FuzzPartial {
    std::uint64_t checks = 0;
    std::vector<Violation> violations;
};

struct Checker {
    std::uint64_t trial;
    double slack;
    FuzzPartial* out;

    // records a violation of lhs <= rhs + slack
    void le(const char* name, double lhs, double rhs) {
        ++out->checks;
        if (!(lhs <= rhs + slack)) out->violations.push_back({trial, name, lhs, rhs});
    }
    void within(const char* name, const Interval& box, double value) {
        le((std::string(name) + " lower").c_str(), box.lower, value);
        le((std::string(name) + " upper").c_str(), value, box.upper);
    }
    void close(const char* name, double a, double b, double tol) {
        ++out->checks;
        if (!(std::abs(a - b) <= tol)) out->violations.push_back({trial, name, a, b});
    }
};

inline void fuzz_one_pair(const Domain& G, std::uint64_t trial, std::uint64_t seed,
                          FuzzPartial& acc) {
    constexpr double rt2 = std::numbers::sqrt2;
    TrialRng rng(seed, trial);
    Point x = sample_point(G, rng);
    Point y = sample_point(G, rng);
    while (x == y) y = sample_point(G, rng);

    Checker c{trial, 1e-9, &acc};
    const double rho = hyperbolic_distance(G, x, y);
    const double th2 = std::tanh(0.5 * rho);
    const double th4 = std::tanh(0.25 * rho);
    const double j = distance_ratio_metric(G, x, y);
    const double js = jstar_metric(G, x, y);
    const double tm = t_metric(G, x, y);
    const double s = triangular_ratio_metric(G, x, y);
    const double p = point_pair_function(G, x, y);
    const double b2 = barrlund_metric(G, 2.0, x, y);

    c.le("jstar <= s", js, s);
    c.le("s <= 2 jstar", s, 2.0 * js);
    c.le("jstar <= p", js, p);
    c.le("p <= sqrt2 jstar", p, rt2 * js);
    c.le("p/sqrt2 <= s", p / rt2, s);
    c.le("s <= sqrt2 p", s, rt2 * p);
    c.le("max(s,p)/2 <= t", 0.5 * std::max(s, p), tm);
    c.le("t <= jstar", tm, js);
    c.le("s <= b2", s, b2);
    c.le("b2 <= sqrt2 s", b2, rt2 * s);
    c.close("jstar = th(j/2)", js, std::tanh(0.5 * j), 1e-12);

    if (G.is_convex()) {
        const double w = w_quasi_metric(G, x, y);
        c.le("convex: jstar <= w", js, w);
        c.le("convex: w <= s", w, s);
        c.le("convex: s <= p", s, p);

        if (G.kind() == DomainKind::half_space) {
            c.close("half-space: w = th(rho/2)", w, th2, 1e-10);
            c.close("half-space: s = th(rho/2)", s, th2, 1e-10);
            c.close("half-space: p = th(rho/2)", p, th2, 1e-10);
            c.within("half-space b2/th(rho/2) window", Interval{1.0, rt2}, b2 / th2);
        }
    }

    if (G.kind() == DomainKind::half_space || G.kind() == DomainKind::unit_ball) {
        c.le("th(rho/4) <= jstar", th4, js);
        c.le("jstar <= th(rho/2)", js, th2);
        c.le("th(rho/2)/2 <= t", 0.5 * th2, tm);
        c.le("p <= th(rho/2)", p, th2);
    }

    if (G.kind() == DomainKind::unit_ball) {
        c.le("4p/(sqrt10+sqrt2) <= b2",
             4.0 * p / (std::sqrt(10.0) + rt2), b2);
        const double nx = x.norm();
        const double ny = y.norm();
        const RadiusWindow window{std::min(nx, ny), std::max(nx, ny)};
        c.within("windowed t/th(rho/2)",
                 ratio_bounds_vs_half_rho(MetricKind::t_metric(), window), tm / th2);
        c.within("windowed jstar/th(rho/2)",
                 ratio_bounds_vs_half_rho(MetricKind::jstar(), window), js / th2);
        c.within("windowed p/th(rho/2)",
                 ratio_bounds_vs_half_rho(MetricKind::point_pair(), window), p / th2);
        c.within("windowed b2/th(rho/2)",
                 ratio_bounds_vs_half_rho(MetricKind::barrlund(2.0), window), b2 / th2);
        c.within("windowed s/th(rho/2)",
                 ratio_bounds_vs_half_rho(MetricKind::triangular_ratio(), window),
                 s / th2);
        const double w = w_quasi_metric(G, x, y);
        c.within("windowed w/th(rho/2)",
                 ratio_bounds_vs_half_rho(MetricKind::w_quasi(), window), w / th2);
        c.within("global b2/th(rho/2)", Interval{1.0 / rt2, rt2}, b2 / th2);

        // the midpoint rotation bounds hold in any ball dimension
        const double q = hyperbolic_midpoint(x, y).norm();
        c.within("midpoint rotation bounds on s", midpoint_rotation_s_bounds(q, th4), s);

        if (G.dim() == 2) {
            const complex_t cx = x.to_complex();
            const complex_t cy = y.to_complex();
            // Moebius self-map bound: d(h(x),h(y)) <= 2d/(1+d^2)
            const MoebiusMap h =
                compose(MoebiusMap::rotation(2.0 * std::numbers::pi * rng.next_unit()),
                        MoebiusMap::disk_automorphism(sample_unit_disk(rng)));
            const Point hx = Point::from_complex(h.apply(cx));
            const Point hy = Point::from_complex(h.apply(cy));
            c.le("moebius doubling jstar", jstar_metric(G, hx, hy), 2.0 * js / (1.0 + js * js));
            c.le("moebius doubling w", w_quasi_metric(G, hx, hy), 2.0 * w / (1.0 + w * w));
            c.le("moebius doubling s", triangular_ratio_metric(G, hx, hy), 2.0 * s / (1.0 + s * s));
            c.le("moebius doubling p", point_pair_function(G, hx, hy), 2.0 * p / (1.0 + p * p));

            const MoebiusMap f = MoebiusMap::disk_automorphism(sample_unit_disk(rng));
            const Point fx = Point::from_complex(f.apply(cx));
            const Point fy = Point::from_complex(f.apply(cy));
            const double quotient = triangular_ratio_metric(G, fx, fy) / s;
            c.within("s-quotient bounds under T_a", s_quotient_bounds(q, th4), quotient);
        }
    }
}

}  // namespace detail

/// Samples point pairs in the domain and checks every supported metric
/// inequality with slack 1e-9; the report lists any violating tuples in
/// trial order.
inline FuzzReport inequality_fuzz(const Domain& G, std::uint64_t trials,
                                  std::uint64_t seed) {
    detail::FuzzPartial sum = detail::run_trials<detail::FuzzPartial>(
        trials, detail::FuzzPartial{},
        [&](std::uint64_t trial, detail::FuzzPartial& acc) {
            detail::fuzz_one_pair(G, trial, seed, acc);
        },
        [](detail::FuzzPartial& acc, const detail::FuzzPartial& part) {
            acc.checks += part.checks;
            acc.violations.insert(acc.violations.end(), part.violations.begin(),
                                  part.violations.end());
        });
    std::sort(sum.violations.begin(), sum.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return a.trial != b.trial ? a.trial < b.trial : a.name < b.name;
              });
    return {trials, sum.checks, seed, std::move(sum.violations)};
}

/// One row of the bound-surface table for the s-quotient bounds l and u.
struct GridRow {
    double q;
    double t;
    double lower;
    double upper;
    const char* branch;  // "below", "seam" or "above" relative to q = t^2
};

/// Uniform (q, t) grid over [0, 1] x (0, 1) with the seam q = t^2 inserted
/// into every t row.
inline std::vector<GridRow> quotient_bound_grid(int resolution) {
    if (resolution < 2)
        throw invalid_parameter_error("quotient_bound_grid: resolution >= 2 required");
    std::vector<GridRow> rows;
    rows.reserve(static_cast<std::size_t>(resolution) * (resolution + 1));
    for (int j = 0; j < resolution; ++j) {
        const double t = static_cast<double>(j + 1) / (resolution + 1);
        std::vector<double> qs;
        qs.reserve(static_cast<std::size_t>(resolution) + 1);
        for (int i = 0; i < resolution; ++i)
            qs.push_back(static_cast<double>(i) / (resolution - 1));
        const double seam = t * t;
        if (std::find(qs.begin(), qs.end(), seam) == qs.end()) qs.push_back(seam);
        std::sort(qs.begin(), qs.end());
        for (double q : qs) {
            const Interval b = s_quotient_bounds(q, t);
            const char* branch = q < seam ? "below" : (q == seam ? "seam" : "above");
            rows.push_back({q, t, b.lower, b.upper, branch});
        }
    }
    return rows;
}

}  // namespace metriclab
