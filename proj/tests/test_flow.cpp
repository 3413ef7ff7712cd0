#include "doctest.h"

#include "staticflow/flow.hpp"
#include "staticflow/geometry.hpp"
#include "staticflow/solutions.hpp"

#include <cmath>

using namespace staticflow;

namespace {

double sup_abs(const Profile& p) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s = std::max(s, std::abs(p[i]));
    return s;
}

FlowState self_anchored(const StaticTriple& t) {
    FlowState s;
    s.g = t.metric;
    s.V = t.V;
    s.background = t;
    return s;
}

StaticTriple wavy_fixture(const RadialGrid& grid, int n) {
    Profile A(grid, [](double r) { return 1.0 + 0.2 * std::exp(-(r - 2.0) * (r - 2.0)); });
    Profile B(grid, [](double r) { return std::sinh(r) * std::sinh(r) * (1.0 + 0.1 * std::exp(-r)); });
    Profile V(grid, [](double r) { return std::cosh(r) * (1.0 + 0.05 * std::exp(-(r - 2.5) * (r - 2.5))); });
    return StaticTriple(RotSymMetric(n, std::move(A), std::move(B)), std::move(V));
}

} // namespace

TEST_CASE("rhs vanishes to truncation error on the exact vacua") {
    const RadialGrid grid(1.0, 4.0, 401);
    const double h2 = grid.spacing() * grid.spacing();
    for (int n : {3, 4}) {
        const FlowDerivative d_ads = rhs(self_anchored(ads(n, grid)));
        CHECK(sup_abs(d_ads.dA) < 50.0 * h2);
        CHECK(sup_abs(d_ads.dB) < 50.0 * h2);
        CHECK(sup_abs(d_ads.dV) < 50.0 * h2);

        const FlowDerivative d_schw = rhs(self_anchored(schwarzschild_ads(n, 0.5, grid)));
        CHECK(sup_abs(d_schw.dA) < 5000.0 * h2);
        CHECK(sup_abs(d_schw.dB) < 5000.0 * h2);
        CHECK(sup_abs(d_schw.dV) < 5000.0 * h2);
    }
}

TEST_CASE("gauge-consistent rhs is second order on the vacuum") {
    double prev = 0.0;
    for (std::size_t count : {201, 401}) {
        const RadialGrid grid(1.0, 4.0, count);
        const FlowDerivative d = rhs(self_anchored(ads(3, grid)));
        double sup = 0.0;
        for (std::size_t i = 0; i < grid.count; ++i) {
            sup = std::max(sup, std::abs(d.dA[i]));
            sup = std::max(sup, std::abs(d.dB[i]) / std::sinh(grid.node(i)) / std::sinh(grid.node(i)));
        }
        if (prev > 0.0) {
            const double factor = prev / sup;
            CHECK(factor > 3.5);
            CHECK(factor < 4.5);
        }
        prev = sup;
    }
}

TEST_CASE("rhs treats the lapse linearly and the metric scale-invariantly") {
    const RadialGrid grid(1.0, 4.0, 201);
    const StaticTriple t = ads(3, grid);
    const FlowDerivative base = rhs(self_anchored(t));

    FlowState doubled = self_anchored(t);
    for (auto& v : doubled.V.values) v *= 2.0;
    const FlowDerivative scaled = rhs(doubled);
    const double h2 = grid.spacing() * grid.spacing();
    for (std::size_t i = 0; i < grid.count; i += 10) {
        CHECK(scaled.dV[i] == doctest::Approx(2.0 * base.dV[i]).epsilon(1e-9));
        CHECK(std::abs(scaled.dA[i] - base.dA[i]) < 1e-8);
        CHECK(std::abs(scaled.dB[i] - base.dB[i]) < 1e-8 * t.metric.B[i]);
    }
    CHECK(sup_abs(scaled.dV) < 100.0 * h2);
}

TEST_CASE("rhs dV is additive in the lapse up to vanishing discretization error") {
    // The continuum lapse equation is linear in V. The discrete operator
    // differentiates log V, so additivity holds to O(h^2); check the defect
    // and its second-order decay.
    double prev = 0.0;
    for (std::size_t count : {201, 401}) {
        const RadialGrid grid(1.0, 4.0, count);
        const StaticTriple t = wavy_fixture(grid, 4);
        FlowState sa = self_anchored(t), sb = self_anchored(t), ssum = self_anchored(t);
        for (std::size_t i = 0; i < grid.count; ++i) {
            const double r = grid.node(i);
            sa.V[i] = std::cosh(r);
            sb.V[i] = 2.0 + 0.3 * std::sin(r);
            ssum.V[i] = sa.V[i] + sb.V[i];
        }
        const FlowDerivative da = rhs(sa), db = rhs(sb), dsum = rhs(ssum);
        double defect = 0.0;
        for (std::size_t i = 0; i < grid.count; ++i)
            defect = std::max(defect, std::abs(dsum.dV[i] - da.dV[i] - db.dV[i]) / ssum.V[i]);
        if (prev > 0.0) {
            const double factor = prev / defect;
            CHECK(factor > 3.3);
            CHECK(factor < 4.7);
        } else {
            CHECK(defect < 5e-4);
        }
        prev = defect;
    }
}

TEST_CASE("rhs matches a direct transcription of the gauged lapse equation") {
    // dV = g^{ij} hat nabla_i hat nabla_j V - n V, assembled here with plain
    // stencils and hat Christoffel symbols, nothing shared with the flow kernel.
    double prev = 0.0;
    for (std::size_t count : {201, 401}) {
        const RadialGrid grid(1.0, 4.0, count);
        const StaticTriple state = wavy_fixture(grid, 4);
        const StaticTriple background = ads(4, grid);
        FlowState s = self_anchored(state);
        s.background = background;
        const FlowDerivative d = rhs(s);

        std::vector<double> v1, v2, ah1, bh1;
        stencil::d1(state.V.values, grid.spacing(), v1);
        stencil::d2(state.V.values, grid.spacing(), v2);
        stencil::d1(background.metric.A.values, grid.spacing(), ah1);
        stencil::d1(background.metric.B.values, grid.spacing(), bh1);

        double sup = 0.0;
        for (std::size_t i = 1; i + 1 < grid.count; ++i) { // flow pins the boundary rows
            const double gamma_rrr = 0.5 * ah1[i] / background.metric.A[i];
            const double gamma_rsph = 0.5 * bh1[i] / background.metric.A[i];
            const double direct = (v2[i] - gamma_rrr * v1[i]) / state.metric.A[i] +
                                  3.0 * gamma_rsph * v1[i] / state.metric.B[i] -
                                  4.0 * state.V[i];
            sup = std::max(sup, std::abs(d.dV[i] - direct));
        }
        if (prev > 0.0) {
            const double factor = prev / sup;
            CHECK(factor > 3.3);
            CHECK(factor < 4.7);
        } else {
            CHECK(sup < 0.3);
        }
        prev = sup;
    }
}

TEST_CASE("zero step returns the state unchanged") {
    const RadialGrid grid(1.0, 3.0, 101);
    const FlowState s = self_anchored(ads(3, grid));
    const FlowState out = step(s, 0.0, Scheme::rk4);
    for (std::size_t i = 0; i < grid.count; ++i) {
        CHECK(out.g.A[i] == s.g.A[i]);
        CHECK(out.g.B[i] == s.g.B[i]);
        CHECK(out.V[i] == s.V[i]);
    }
}

TEST_CASE("step rejects unstable time steps") {
    const RadialGrid grid(1.0, 3.0, 101);
    const FlowState s = self_anchored(ads(3, grid));
    const double bound = max_stable_dt(StaticTriple(s.g, s.V));
    CHECK_THROWS_AS(step(s, 2.0 * bound, Scheme::euler), std::domain_error);
    CHECK_THROWS_AS(step(s, -1.0, Scheme::rk4), std::invalid_argument);
}

TEST_CASE("a single step from the vacuum moves at truncation level") {
    const RadialGrid grid(1.0, 3.0, 201);
    const StaticTriple t = ads(3, grid);
    const double dt = 4e-5;
    REQUIRE(dt <= max_stable_dt(t));
    const FlowState out = step(self_anchored(t), dt, Scheme::rk4);
    const double h2 = grid.spacing() * grid.spacing();
    double dev = 0.0;
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double ra = (out.g.A[i] - t.metric.A[i]) / t.metric.A[i];
        const double rb = (out.g.B[i] - t.metric.B[i]) / t.metric.B[i];
        dev = std::max(dev, std::exp(2.0 * grid.node(i)) * std::sqrt(ra * ra + 2.0 * rb * rb));
    }
    CHECK(dev < 100.0 * h2 * dt);
}

TEST_CASE("time integration orders: euler is first, rk4 at least fourth") {
    const RadialGrid grid(1.0, 3.0, 101);
    PerturbationSpec p;
    p.amplitude = 0.05;
    p.center = 2.0;
    p.width = 0.6;
    const StaticTriple initial = perturb(ads(3, grid), p);

    const double t_end = 0.02;
    auto run = [&](Scheme scheme, double dt) {
        FlowState s = self_anchored(initial);
        const auto steps = static_cast<std::uint64_t>(std::llround(t_end / dt));
        for (std::uint64_t k = 0; k < steps; ++k) s = step(s, dt, scheme);
        return s;
    };
    auto dist = [&](const FlowState& x, const FlowState& y) {
        double m = 0.0;
        for (std::size_t i = 0; i < grid.count; ++i) {
            m = std::max(m, std::abs(x.g.A[i] - y.g.A[i]));
            m = std::max(m, std::abs(x.g.B[i] - y.g.B[i]) / initial.metric.B[i]);
            m = std::max(m, std::abs(x.V[i] - y.V[i]) / initial.V[i]);
        }
        return m;
    };

    const double dt0 = 1e-4;
    const FlowState ref = run(Scheme::rk4, dt0 / 16.0);

    const double e_euler_1 = dist(run(Scheme::euler, dt0), ref);
    const double e_euler_2 = dist(run(Scheme::euler, dt0 / 2.0), ref);
    const double slope_euler = std::log2(e_euler_1 / e_euler_2);
    CHECK(slope_euler > 0.7);
    CHECK(slope_euler < 1.5);

    const double e_rk4_1 = dist(run(Scheme::rk4, dt0), ref);
    const double e_rk4_2 = dist(run(Scheme::rk4, dt0 / 2.0), ref);
    const double slope_rk4 = std::log2(e_rk4_1 / e_rk4_2);
    CHECK(slope_rk4 > 3.5);
}

TEST_CASE("evolve holds the exact vacuum stationary") {
    const RadialGrid grid(1.0, 4.0, 201);
    FlowControls controls;
    controls.t_end = 0.1;
    controls.monitor_every = 50;
    const FlowReport report = evolve(ads(3, grid), controls);
    CHECK(report.terminated == Termination::completed);
    CHECK(report.weighted_dev.front() == 0.0);
    const double h2 = grid.spacing() * grid.spacing();
    CHECK(report.max_weighted_dev() <= 10.0 * h2);
    for (double v : report.min_lapse) CHECK(v > 0.0);
}

TEST_CASE("evolve keeps the decaying perturbation class within its budget") {
    const RadialGrid grid(1.0, 4.0, 201);
    FlowControls controls;
    controls.t_end = 0.05;
    controls.monitor_every = 50;
    controls.deviation_budget = 0.05; // five times the amplitude

    PerturbationSpec p; // default bump: center 0, width 1, decay 2
    p.amplitude = 0.01;
    const StaticTriple perturbed = perturb(ads(3, grid), p);

    const FlowReport report = evolve(perturbed, controls);
    CHECK(report.terminated == Termination::completed);
    CHECK(report.max_weighted_dev() <= controls.deviation_budget);
}

TEST_CASE("a perturbed start drifts measurably above the vacuum") {
    const RadialGrid grid(1.0, 4.0, 201);
    FlowControls controls;
    controls.t_end = 0.05;
    controls.monitor_every = 50;

    PerturbationSpec p;
    p.amplitude = 0.03;
    p.center = 1.5;
    p.width = 0.7;
    const double drift_perturbed = stationarity_drift(perturb(ads(3, grid), p), 0.05, controls);
    const double drift_vacuum = stationarity_drift(ads(3, grid), 0.05, controls);
    CHECK(drift_perturbed > 3.0 * drift_vacuum);
}

TEST_CASE("evolve flags injected violations") {
    const RadialGrid grid(1.0, 3.0, 101);
    SUBCASE("negative lapse") {
        StaticTriple bad = ads(3, grid);
        bad.V[40] = -1.0;
        FlowControls controls;
        controls.t_end = 0.01;
        const FlowReport report = evolve(bad, controls);
        CHECK(report.terminated == Termination::positivity_lost);
        CHECK(report.min_lapse.front() < 0.0);
    }
    SUBCASE("non-finite sample") {
        StaticTriple bad = ads(3, grid);
        bad.metric.B[10] = std::nan("");
        FlowControls controls;
        controls.t_end = 0.01;
        CHECK(evolve(bad, controls).terminated == Termination::nonfinite);
    }
    SUBCASE("tiny budget trips the monitor") {
        PerturbationSpec p;
        p.amplitude = 0.05;
        p.center = 2.0;
        FlowControls controls;
        controls.t_end = 0.05;
        controls.monitor_every = 10;
        controls.deviation_budget = 1e-10;
        const FlowReport report = evolve(perturb(ads(3, grid), p), controls);
        CHECK(report.terminated == Termination::budget_exceeded);
        CHECK(!report.times.empty());
    }
}

TEST_CASE("evolve is deterministic") {
    const RadialGrid grid(1.0, 3.5, 151);
    PerturbationSpec p;
    p.amplitude = 0.02;
    p.center = 2.0;
    FlowControls controls;
    controls.t_end = 0.03;
    controls.monitor_every = 25;
    const StaticTriple initial = perturb(ads(4, grid), p);
    const FlowReport r1 = evolve(initial, controls);
    const FlowReport r2 = evolve(initial, controls);
    REQUIRE(r1.times.size() == r2.times.size());
    for (std::size_t i = 0; i < r1.times.size(); ++i) {
        CHECK(r1.times[i] == r2.times[i]);
        CHECK(r1.weighted_dev[i] == r2.weighted_dev[i]);
        CHECK(r1.min_lapse[i] == r2.min_lapse[i]);
        CHECK(r1.as_defect[i] == r2.as_defect[i]);
        CHECK(r1.residual_norms[i] == r2.residual_norms[i]);
    }
}

TEST_CASE("controls are validated") {
    FlowControls c;
    c.t_end = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.t_end = 1.0;
    c.cfl = 1.5;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}
