#include "doctest.h"

#include "staticflow/geometry.hpp"
#include "staticflow/solutions.hpp"

#include <cmath>

using namespace staticflow;

TEST_CASE("ads samples the closed forms") {
    const RadialGrid grid(1.0, 4.0, 301);
    const StaticTriple t = ads(4, grid);
    CHECK(t.metric.A[0] == 1.0);
    CHECK(t.metric.B[0] == doctest::Approx(1.3810978455418157).epsilon(1e-14)); // sinh(1)^2
    CHECK(t.V[0] == doctest::Approx(1.5430806348152437).epsilon(1e-14));        // cosh(1)
    CHECK_THROWS_AS(ads(2, grid), std::invalid_argument);
}

TEST_CASE("schwarzschild lapse value and horizon guard") {
    const RadialGrid grid(2.0, 6.0, 201);
    const StaticTriple t = schwarzschild_ads(3, 0.5, grid);
    CHECK(t.V[0] * t.V[0] == doctest::Approx(4.5).epsilon(1e-14)); // 1 + 4 - 0.5

    // horizon of 1 + rho^2 - 1/rho: root near 0.6823
    const double rh = horizon_radius(3, 0.5);
    CHECK(1.0 + rh * rh - 1.0 / rh == doctest::Approx(0.0).epsilon(1e-10));
    CHECK_THROWS_AS(schwarzschild_ads(3, 0.5, RadialGrid(0.7, 6.0, 201)), std::domain_error);
}

TEST_CASE("zero mass degenerates to AdS in the area radius") {
    const RadialGrid grid(1.0, 5.0, 401);
    const StaticTriple t = schwarzschild_ads(4, 0.0, grid);
    for (std::size_t i = 0; i < grid.count; i += 40) {
        const double rho = grid.node(i);
        CHECK(t.V[i] == doctest::Approx(std::sqrt(1.0 + rho * rho)).epsilon(1e-14));
        CHECK(t.metric.A[i] == doctest::Approx(1.0 / (1.0 + rho * rho)).epsilon(1e-14));
    }
    CHECK(residual_norms(t).sup() < 50.0 * grid.spacing() * grid.spacing());
}

TEST_CASE("small mass stays within O(m) of the massless fixture") {
    const RadialGrid grid(1.0, 5.0, 201);
    const double m = 1e-3;
    const StaticTriple tm = schwarzschild_ads(3, m, grid);
    const StaticTriple t0 = schwarzschild_ads(3, 0.0, grid);
    double sup = 0.0;
    for (std::size_t i = 0; i < grid.count; ++i) {
        sup = std::max(sup, std::abs(tm.metric.A[i] - t0.metric.A[i]));
        sup = std::max(sup, std::abs(tm.V[i] - t0.V[i]));
    }
    CHECK(sup > 0.0);
    CHECK(sup < 5.0 * m);
}

TEST_CASE("exact fixtures pass the residual gate at second order") {
    double prev_ads = 0.0, prev_schw = 0.0;
    for (std::size_t count : {201, 401}) {
        const RadialGrid grid(1.0, 4.0, count);
        for (int n : {3, 4, 5}) {
            const double h2 = grid.spacing() * grid.spacing();
            const double r_ads = residual_norms(ads(n, grid)).sup();
            const double r_schw = residual_norms(schwarzschild_ads(n, 0.5, grid)).sup();
            CHECK(r_ads < 20.0 * h2);
            CHECK(r_schw < 3500.0 * h2);
            if (n == 3) {
                if (prev_ads > 0.0) CHECK(prev_ads / r_ads > 3.0);
                if (prev_schw > 0.0) CHECK(prev_schw / r_schw > 3.0);
                prev_ads = r_ads;
                prev_schw = r_schw;
            }
        }
    }
}

TEST_CASE("perturb") {
    const RadialGrid grid(1.0, 6.0, 501);
    const StaticTriple base = ads(3, grid);
    SUBCASE("identity at zero amplitude") {
        PerturbationSpec p;
        p.amplitude = 0.0;
        const StaticTriple out = perturb(base, p);
        for (std::size_t i = 0; i < grid.count; ++i) {
            CHECK(out.metric.B[i] == base.metric.B[i]);
            CHECK(out.V[i] == base.V[i]);
        }
    }
    SUBCASE("weighted deviation of the default bump stays within twice the amplitude") {
        PerturbationSpec p;
        p.amplitude = 0.01;
        p.decay = 2.0;
        p.target = PerturbationSpec::Target::B;
        const StaticTriple out = perturb(base, p);
        Profile dev(grid, std::vector<double>(grid.count));
        for (std::size_t i = 0; i < grid.count; ++i) {
            const double rel = (out.metric.B[i] - base.metric.B[i]) / base.metric.B[i];
            dev[i] = std::sqrt(2.0) * std::abs(rel); // frame norm, n = 3
        }
        const double w = weighted_sup(dev, 2.0);
        CHECK(w > 0.0);
        CHECK(w <= 2.0 * p.amplitude);
    }
    SUBCASE("first-order dependence on the amplitude") {
        PerturbationSpec p1, p2;
        p1.amplitude = 0.01;
        p2.amplitude = 0.005;
        p1.center = p2.center = 2.0;
        const StaticTriple o1 = perturb(base, p1);
        const StaticTriple o2 = perturb(base, p2);
        for (std::size_t i = 0; i < grid.count; i += 50) {
            if (std::abs(grid.node(i) - 2.0) > 1.5) continue;
            const double d1 = o1.metric.B[i] - base.metric.B[i];
            const double d2 = o2.metric.B[i] - base.metric.B[i];
            CHECK(d1 / d2 == doctest::Approx(2.0).epsilon(1e-6));
        }
    }
    SUBCASE("amplitude guard") {
        PerturbationSpec p;
        p.amplitude = 0.9;
        p.target = PerturbationSpec::Target::V;
        CHECK_THROWS_AS(perturb(base, p), std::invalid_argument);
    }
}
