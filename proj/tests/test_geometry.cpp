// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "metriclab/experiments.hpp"
#include "metriclab/geometry.hpp"
#include "oracles.hpp"

using namespace metriclab;

namespace {

constexpr double kPi = std::numbers::pi;

TEST(Point, Validation) {
    EXPECT_THROW(Point(std::vector<double>{1.0}), invalid_parameter_error);
    EXPECT_THROW(Point(0.0, std::numeric_limits<double>::quiet_NaN()),
                 invalid_parameter_error);
    EXPECT_THROW(Point(std::numeric_limits<double>::infinity(), 0.0),
                 invalid_parameter_error);
    const Point p(std::vector<double>{1.0, 2.0, 3.0});
    EXPECT_EQ(p.dim(), 3u);
    EXPECT_DOUBLE_EQ(p.norm(), std::sqrt(14.0));
    EXPECT_THROW(p.to_complex(), unsupported_dimension_error);
}

TEST(Domain, Membership) {
    const Domain half = Domain::half_space(2);
    EXPECT_TRUE(half.contains(Point(2.0, 3.0)));
    EXPECT_FALSE(half.contains(Point(2.0, 0.0)));
    EXPECT_FALSE(half.contains(Point(2.0, -0.1)));

    const Domain ball = Domain::unit_ball(3);
    EXPECT_TRUE(ball.contains(Point(std::vector<double>{0.5, 0.5, 0.5})));
    EXPECT_FALSE(ball.contains(Point(std::vector<double>{1.0, 0.0, 0.0})));
    EXPECT_FALSE(ball.contains(Point(0.1, 0.1)));  // wrong dimension

    const Domain sector = Domain::sector(kPi / 2.0);
    EXPECT_TRUE(sector.contains(Point(1.0, 1.0)));
    EXPECT_FALSE(sector.contains(Point(1.0, 0.0)));   // boundary ray
    EXPECT_FALSE(sector.contains(Point(0.0, 0.0)));   // vertex
    EXPECT_FALSE(sector.contains(Point(1.0, -1.0)));
    EXPECT_TRUE(Domain::sector(3.0 * kPi / 2.0).contains(Point(-1.0, -1.0)));

    EXPECT_THROW(Domain::sector(0.0), invalid_parameter_error);
    EXPECT_THROW(Domain::sector(2.0 * kPi), invalid_parameter_error);
    EXPECT_THROW(Domain::unit_ball(1), invalid_parameter_error);
}

TEST(BoundaryDistance, ClosedForms) {
    EXPECT_DOUBLE_EQ(boundary_distance(Domain::unit_ball(2), Point(0.3, 0.4)), 0.5);
    EXPECT_DOUBLE_EQ(boundary_distance(Domain::half_space(2), Point(2.0, 3.0)), 3.0);
    EXPECT_DOUBLE_EQ(boundary_distance(Domain::sector(kPi / 2.0), Point(1.0, 1.0)), 1.0);
    EXPECT_THROW(boundary_distance(Domain::unit_ball(2), Point(2.0, 0.0)),
                 domain_membership_error);
}

TEST(BoundaryDistance, SectorVertexCase) {
    // wide sector: feet of both perpendiculars fall off the rays
    const Domain wide = Domain::sector(1.5 * kPi);
    const Point x(-1.0, -1.0);  // arg = 5*pi/4, inside
    ASSERT_TRUE(wide.contains(x));
    // distance to ray arg=0 is |x| (foot behind vertex); to ray arg=3pi/2 it is 1
    EXPECT_NEAR(boundary_distance(wide, x), 1.0, 1e-15);
    const Point far_mid(-std::cos(0.25 * kPi), -std::sin(0.25 * kPi));
    EXPECT_NEAR(boundary_distance(Domain::sector(1.75 * kPi), far_mid), 1.0, 1e-12);
}

TEST(NearestBoundaryPoints, Examples) {
    const auto ball_pts = nearest_boundary_points(Domain::unit_ball(2), Point(0.5, 0.0));
    ASSERT_EQ(ball_pts.size(), 1u);
    EXPECT_NEAR(ball_pts[0][0], 1.0, 1e-15);
    EXPECT_NEAR(ball_pts[0][1], 0.0, 1e-15);

    const auto half_pts = nearest_boundary_points(Domain::half_space(2), Point(2.0, 3.0));
    ASSERT_EQ(half_pts.size(), 1u);
    EXPECT_DOUBLE_EQ(half_pts[0][0], 2.0);
    EXPECT_DOUBLE_EQ(half_pts[0][1], 0.0);

    // bisector point of the quarter-plane sees both feet
    const auto sector_pts =
        nearest_boundary_points(Domain::sector(kPi / 2.0), Point(1.0, 1.0));
    ASSERT_EQ(sector_pts.size(), 2u);
    EXPECT_NEAR(sector_pts[0][0] + sector_pts[1][0], 1.0, 1e-12);
    EXPECT_NEAR(sector_pts[0][1] + sector_pts[1][1], 1.0, 1e-12);

    EXPECT_THROW(nearest_boundary_points(Domain::sector(1.5 * kPi), Point(-1.0, -1.0)),
                 non_convex_domain_error);
    EXPECT_THROW(nearest_boundary_points(Domain::unit_ball(2), Point(0.0, 0.0)),
                 invalid_parameter_error);
}

TEST(NearestBoundaryPoints, RealizeTheDistance) {
    TrialRng rng(11, 0);
    const Domain domains[] = {Domain::unit_ball(2), Domain::half_space(3),
                              Domain::sector(2.0)};
    for (const Domain& G : domains) {
        for (int i = 0; i < 200; ++i) {
            const Point x = sample_point(G, rng);
            if (G.kind() == DomainKind::unit_ball && x.norm() == 0.0) continue;
            const double d = boundary_distance(G, x);
            EXPECT_GT(d, 0.0);
            for (const Point& z : nearest_boundary_points(G, x))
                EXPECT_NEAR(distance(x, z), d, 1e-12);
        }
    }
}

TEST(AhlforsBracket, Values) {
    // A[0, y] = 1 for every point of the ball
    EXPECT_DOUBLE_EQ(ahlfors_bracket(Point(0.0, 0.0), Point(0.3, 0.2)), 1.0);
    EXPECT_DOUBLE_EQ(ahlfors_bracket(Point(0.5, 0.0), Point(0.5, 0.0)), 0.75);
    EXPECT_THROW(ahlfors_bracket(Point(1.0, 0.0), Point(0.0, 0.0)),
                 domain_membership_error);

    // cross-check against th(rho/2) = |x-y| / A[x,y] with rho in arsinh form
    const Point x(0.1, 0.3), y(0.3, 0.5);
    const double a = ahlfors_bracket(x, y);
    EXPECT_NEAR(a, std::sqrt(0.674), 1e-15);
    const double d = distance(x, y);
    const double rho = 2.0 * std::asinh(d / std::sqrt(0.9 * 0.66));
    EXPECT_NEAR(d / a, std::tanh(0.5 * rho), 1e-14);
}

TEST(AhlforsBracket, DominatesBothFactors) {
    TrialRng rng(12, 0);
    for (int i = 0; i < 2000; ++i) {
        const Point x = Point::from_complex(sample_unit_disk(rng));
        const Point y = Point::from_complex(sample_unit_disk(rng));
        const double a = ahlfors_bracket(x, y);
        const double d = distance(x, y);
        const double g = std::sqrt((1.0 - x.norm_sq()) * (1.0 - y.norm_sq()));
        EXPECT_GE(a, d - 1e-15);
        EXPECT_GE(a, g - 1e-15);
    }
    // degenerate corners: equality when the other term vanishes
    EXPECT_DOUBLE_EQ(ahlfors_bracket(Point(0.5, 0.0), Point(0.5, 0.0)), 0.75);
    EXPECT_NEAR(ahlfors_bracket(Point(0.0, 0.0), Point(0.0, 0.0)), 1.0, 1e-15);
}

TEST(BoundaryCostInfimum, TrivialExamples) {
    const Point x(0.0, 0.0), y(0.5, 0.0);
    const auto ball = boundary_cost_infimum(
        Domain::unit_ball(2),
        [&](const Point& z) { return distance(x, z) + distance(z, y); });
    EXPECT_NEAR(ball.value, 1.5, 1e-12);
    EXPECT_NEAR(ball.argmin[0], 1.0, 1e-6);
    EXPECT_NEAR(ball.argmin[1], 0.0, 1e-6);

    const Point i2(0.0, 1.0);
    const auto half = boundary_cost_infimum(
        Domain::half_space(2),
        [&](const Point& z) { return 2.0 * distance(i2, z); });
    EXPECT_NEAR(half.value, 2.0, 1e-12);
    EXPECT_NEAR(half.argmin[0], 0.0, 1e-6);
}

TEST(BoundaryCostInfimum, VertexMinimum) {
    // cost pulled toward the third quadrant: the sector corner wins
    const Point target(-1.0, -1.0);
    const auto r = boundary_cost_infimum(
        Domain::sector(kPi / 2.0),
        [&](const Point& z) { return distance(target, z); });
    EXPECT_NEAR(r.value, std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(r.argmin[0], 0.0, 1e-7);
    EXPECT_NEAR(r.argmin[1], 0.0, 1e-7);
}

TEST(BoundaryCostInfimum, AgreesWithDenseScan) {
    const complex_t x{0.1, 0.3}, y{0.3, 0.5};
    const Domain disk = Domain::unit_ball(2);
    const double scan = oracles::dense_boundary_min(
        disk, [&](complex_t z) { return std::abs(x - z) + std::abs(z - y); }, 1000000);
    const auto refined = boundary_cost_infimum(disk, [&](const Point& z) {
        const complex_t cz = z.to_complex();
        return std::abs(x - cz) + std::abs(cz - y);
    });
    EXPECT_NEAR(refined.value, scan, 1e-6);
    EXPECT_LE(refined.value, scan + 1e-9);
}

TEST(BoundaryCostInfimum, SymmetricInEndpoints) {
    TrialRng rng(13, 0);
    const Domain domains[] = {Domain::unit_ball(2), Domain::half_space(2),
                              Domain::sector(2.5)};
    for (const Domain& G : domains) {
        for (int i = 0; i < 50; ++i) {
            const Point x = sample_point(G, rng);
            const Point y = sample_point(G, rng);
            const auto ab = boundary_cost_infimum(G, [&](const Point& z) {
                return distance(x, z) + distance(z, y);
            });
            const auto ba = boundary_cost_infimum(G, [&](const Point& z) {
                return distance(y, z) + distance(z, x);
            });
            EXPECT_NEAR(ab.value, ba.value, 1e-12);
        }
    }
}

TEST(BoundaryCostInfimum, RefinedNeverWorseThanScan) {
    TrialRng rng(14, 0);
    const Domain domains[] = {Domain::unit_ball(2), Domain::half_space(2),
                              Domain::sector(1.0)};
    for (const Domain& G : domains) {
        for (int i = 0; i < 20; ++i) {
            const complex_t x = sample_point(G, rng).to_complex();
            const complex_t y = sample_point(G, rng).to_complex();
            auto cost = [&](complex_t z) { return std::abs(x - z) + std::abs(z - y); };
            const double scan = oracles::dense_boundary_min(G, cost, 200000);
            const auto refined = boundary_cost_infimum(
                G, [&](const Point& z) { return cost(z.to_complex()); });
            EXPECT_LE(refined.value, scan + 1e-9);
        }
    }
}

}  // namespace
