// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdlib>
#include <numbers>
#include <string>

#include "metriclab/experiments.hpp"
#include "metriclab/io.hpp"

using namespace metriclab;

namespace {

struct ThreadEnvGuard {
    explicit ThreadEnvGuard(const char* value) {
        setenv("METRICS_LAB_THREADS", value, 1);
    }
    ~ThreadEnvGuard() { unsetenv("METRICS_LAB_THREADS"); }
};

TEST(WorkerCount, EnvOverride) {
    {
        ThreadEnvGuard guard("3");
        EXPECT_EQ(worker_count(), 3u);
    }
    {
        ThreadEnvGuard guard("0");
        EXPECT_GE(worker_count(), 1u);
    }
    {
        ThreadEnvGuard guard("not-a-number");
        EXPECT_GE(worker_count(), 1u);
    }
}

TEST(DiskSampling, UniformOnTheDisk) {
    TrialRng rng(101, 0);
    const long n = 1000000;
    double sum_re = 0.0, sum_im = 0.0;
    long inside_half = 0;
    for (long i = 0; i < n; ++i) {
        const complex_t z = sample_unit_disk(rng);
        ASSERT_LT(std::abs(z), 1.0);
        sum_re += z.real();
        sum_im += z.imag();
        if (std::abs(z) < 0.5) ++inside_half;
    }
    EXPECT_NEAR(sum_re / n, 0.0, 0.002);
    EXPECT_NEAR(sum_im / n, 0.0, 0.002);
    EXPECT_NEAR(static_cast<double>(inside_half) / n, 0.25, 0.002);

    // a radius-uniform sampler is visibly not area-uniform: half its points
    // land inside |z| < 1/2
    TrialRng naive(101, 1);
    long naive_inside = 0;
    for (long i = 0; i < n; ++i) {
        const double r = naive.next_unit();
        if (r < 0.5) ++naive_inside;
    }
    EXPECT_NEAR(static_cast<double>(naive_inside) / n, 0.5, 0.002);
}

TEST(DiskSampling, DomainSamplerStaysInside) {
    TrialRng rng(102, 0);
    const Domain domains[] = {Domain::unit_ball(2), Domain::unit_ball(3),
                              Domain::half_space(2), Domain::half_space(3),
                              Domain::sector(2.0)};
    for (const Domain& G : domains)
        for (int i = 0; i < 2000; ++i) EXPECT_TRUE(G.contains(sample_point(G, rng)));
}

TEST(SupDistortion, IdentityMapGivesOne) {
    for (const auto& kind :
         {MetricKind::t_metric(), MetricKind::triangular_ratio(),
          MetricKind::point_pair()}) {
        EXPECT_NEAR(sup_distortion_estimate({0.0, 0.0}, kind, 200, 103), 1.0, 1e-9)
            << kind.name();
    }
}

TEST(SupDistortion, ReachesOnePlusA) {
    // the directed probes already witness the 1+|a| lower bound
    const MetricKind kinds[] = {
        MetricKind::t_metric(),        MetricKind::jstar(),
        MetricKind::w_quasi(),         MetricKind::triangular_ratio(),
        MetricKind::point_pair(),      MetricKind::barrlund(2.0),
    };
    for (const auto& kind : kinds) {
        const double est = sup_distortion_estimate({0.7, 0.0}, kind, 200, 104);
        EXPECT_GE(est, 1.7 - 1e-3) << kind.name();
    }
}

TEST(SupDistortion, SupportsTheEqualityConjecture) {
    // no sampled pair has ever beaten 1 + |a|; keep that observable
    const complex_t a = std::polar(0.55, 1.1);
    const MetricKind kinds[] = {
        MetricKind::t_metric(),   MetricKind::jstar(),      MetricKind::w_quasi(),
        MetricKind::point_pair(), MetricKind::barrlund(2.0),
    };
    for (const auto& kind : kinds) {
        const double est = sup_distortion_estimate(a, kind, 100000, 105);
        EXPECT_GE(est, 1.55 - 1e-3) << kind.name();
        EXPECT_LE(est, 1.55 + 1e-3) << kind.name();
    }
    // the minimizer-backed kind at a smaller trial count
    const double est_s =
        sup_distortion_estimate(a, MetricKind::triangular_ratio(), 20000, 105);
    EXPECT_GE(est_s, 1.55 - 1e-3);
    EXPECT_LE(est_s, 1.55 + 1e-3);
}

TEST(SupDistortion, MonotoneInNestedTrials) {
    const complex_t a{0.4, 0.2};
    double prev = 0.0;
    for (std::uint64_t trials : {50ull, 500ull, 5000ull}) {
        const double est =
            sup_distortion_estimate(a, MetricKind::point_pair(), trials, 106);
        EXPECT_GE(est, prev);
        prev = est;
    }
    EXPECT_THROW(
        sup_distortion_estimate({2.0, 0.0}, MetricKind::point_pair(), 10, 1),
        domain_membership_error);
    EXPECT_THROW(sup_distortion_estimate({0.1, 0.0}, MetricKind::hyperbolic(), 10, 1),
                 invalid_parameter_error);
}

TEST(CompareBounds, FractionMatchesTheKnownRate) {
    const ComparisonSummary s = compare_bound_methods(100000, 42);
    EXPECT_EQ(s.total, 100000u);
    EXPECT_EQ(s.seed, 42u);
    EXPECT_LE(s.both_better, std::min(s.lower_better, s.upper_better));
    const double fraction = static_cast<double>(s.both_better) / s.total;
    EXPECT_GT(fraction, 0.93);
    EXPECT_LT(fraction, 0.96);
}

TEST(CompareBounds, DeterministicAndThreadCountIndependent) {
    const ComparisonSummary once = compare_bound_methods(1, 7);
    const ComparisonSummary again = compare_bound_methods(1, 7);
    EXPECT_TRUE(once == again);

    ComparisonSummary serial{}, parallel{};
    {
        ThreadEnvGuard guard("1");
        serial = compare_bound_methods(20000, 9001);
    }
    {
        ThreadEnvGuard guard("3");
        parallel = compare_bound_methods(20000, 9001);
    }
    EXPECT_TRUE(serial == parallel);
}

TEST(CompareBounds, FractionStableAcrossSeeds) {
    const ComparisonSummary a = compare_bound_methods(1000000, 1001);
    const ComparisonSummary b = compare_bound_methods(1000000, 2002);
    const double fa = static_cast<double>(a.both_better) / a.total;
    const double fb = static_cast<double>(b.both_better) / b.total;
    EXPECT_NEAR(fa, fb, 0.002);
}

TEST(CompareBounds, WorkedExampleCountsAsBothBetter) {
    // a = 0.7, x = 0.1+0.3i, y = 0.3+0.5i
    const complex_t a{0.7, 0.0};
    const double rl = std::abs(complex_t{0.1, 0.3});
    const double ru = std::abs(complex_t{0.3, 0.5});
    const Interval windowed = conformal_distortion_bounds(
        MetricKind::triangular_ratio(), {rl, ru},
        {disk_image_radii(a, rl).inner, disk_image_radii(a, ru).outer});
    const Point x(0.1, 0.3), y(0.3, 0.5);
    const Interval midpoint = s_quotient_bounds(
        hyperbolic_midpoint(x, y).norm(),
        std::tanh(0.25 * hyperbolic_distance(Domain::unit_ball(2), x, y)));
    EXPECT_GT(midpoint.lower, windowed.lower);
    EXPECT_LT(midpoint.upper, windowed.upper);
}

TEST(InequalityFuzz, CleanOnEveryDomain) {
    const Domain domains[] = {Domain::unit_ball(2), Domain::half_space(2),
                              Domain::unit_ball(3),
                              Domain::sector(std::numbers::pi / 2.0)};
    for (const Domain& G : domains) {
        const FuzzReport report = inequality_fuzz(G, 2000, 110);
        EXPECT_EQ(report.trials, 2000u);
        EXPECT_GT(report.checks, 0u);
        EXPECT_TRUE(report.violations.empty())
            << G.name() << ": " << report.violations.size() << " violations, first: "
            << (report.violations.empty() ? "" : report.violations[0].name);
    }
}

TEST(InequalityFuzz, CheckerReportsInjectedViolation) {
    detail::FuzzPartial partial;
    detail::Checker checker{17, 1e-9, &partial};
    checker.le("self-check", 1.0, 0.5);
    ASSERT_EQ(partial.violations.size(), 1u);
    EXPECT_EQ(partial.violations[0].trial, 17u);
    EXPECT_EQ(partial.violations[0].name, "self-check");
    EXPECT_DOUBLE_EQ(partial.violations[0].lhs, 1.0);
    EXPECT_DOUBLE_EQ(partial.violations[0].rhs, 0.5);
    checker.le("fine", 0.5, 1.0);
    EXPECT_EQ(partial.violations.size(), 1u);
    EXPECT_EQ(partial.checks, 2u);
}

TEST(InequalityFuzz, ThreadCountIndependent) {
    FuzzReport serial, parallel;
    {
        ThreadEnvGuard guard("1");
        serial = inequality_fuzz(Domain::unit_ball(2), 1000, 111);
    }
    {
        ThreadEnvGuard guard("3");
        parallel = inequality_fuzz(Domain::unit_ball(2), 1000, 111);
    }
    EXPECT_EQ(serial.checks, parallel.checks);
    EXPECT_EQ(serial.violations.size(), parallel.violations.size());
}

TEST(Grid, RowsAndRanges) {
    const auto rows = quotient_bound_grid(9);
    bool saw_mid = false, saw_one = false;
    int seams = 0;
    for (const auto& row : rows) {
        EXPECT_GT(row.lower, 0.5);
        EXPECT_LE(row.lower, 1.0);
        EXPECT_GE(row.upper, 1.0 - 1e-15);
        EXPECT_LT(row.upper, 2.0);
        if (row.q == 0.0 && row.t == 0.5) {
            saw_mid = true;
            EXPECT_DOUBLE_EQ(row.lower, 1.0);
            EXPECT_DOUBLE_EQ(row.upper, 1.6);
        }
        if (row.q == 1.0 && row.t == 0.5) {
            saw_one = true;
            EXPECT_DOUBLE_EQ(row.lower, 0.625);
            EXPECT_DOUBLE_EQ(row.upper, 1.0);
        }
        if (std::string(row.branch) == "seam") {
            ++seams;
            EXPECT_DOUBLE_EQ(row.q, row.t * row.t);
        }
    }
    EXPECT_TRUE(saw_mid);
    EXPECT_TRUE(saw_one);
    EXPECT_EQ(seams, 9);  // one seam row per t
    EXPECT_THROW(quotient_bound_grid(1), invalid_parameter_error);
}

TEST(Io, SeventeenDigitRoundTrip) {
    TrialRng rng(112, 0);
    for (int i = 0; i < 5000; ++i) {
        const double v = (rng.next_symmetric()) * std::pow(10.0, rng.next_symmetric() * 30.0);
        const std::string s = format_double(v);
        EXPECT_EQ(std::strtod(s.c_str(), nullptr), v) << s;
        EXPECT_EQ(format_double(std::strtod(s.c_str(), nullptr)), s);
    }
}

TEST(Io, JsonAndCsvShape) {
    Json doc = Json::object();
    doc.set("experiment", Json::string("demo"));
    doc.set("seed", Json::integer(std::uint64_t{42}));
    doc.set("trials", Json::integer(std::uint64_t{3}));
    Json results = Json::object();
    results.set("value", Json::number(1.0 / 3.0));
    Json arr = Json::array();
    arr.push(Json::number(0.5));
    arr.push(Json::string("a\"b"));
    results.set("rows", std::move(arr));
    doc.set("results", std::move(results));
    EXPECT_EQ(doc.dump(),
              "{\"experiment\":\"demo\",\"seed\":42,\"trials\":3,"
              "\"results\":{\"value\":0.33333333333333331,"
              "\"rows\":[0.5,\"a\\\"b\"]}}");

    Csv csv({"q", "t"});
    csv.row({format_double(0.25), format_double(0.5)});
    EXPECT_EQ(csv.dump(), "q,t\n0.25,0.5\n");
}

}  // namespace
