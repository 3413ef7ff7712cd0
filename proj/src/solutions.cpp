#include "staticflow/solutions.hpp"

#include <cmath>
#include <string>

namespace staticflow {

StaticTriple ads(int n, const RadialGrid& grid) {
    if (n < 3) throw std::invalid_argument("ads: dimension must be at least 3");
    Profile A(grid, [](double) { return 1.0; });
    Profile B(grid, [](double r) { return std::sinh(r) * std::sinh(r); });
    Profile V(grid, [](double r) { return std::cosh(r); });
    StaticTriple t(RotSymMetric(n, std::move(A), std::move(B)), std::move(V));
    t.validate();
    return t;
}

double horizon_radius(int n, double mass) {
    if (mass <= 0.0) return 0.0;
    // f(rho) = 1 + rho^2 - 2 m rho^{2-n} is strictly increasing; bisect.
    auto f = [&](double rho) { return 1.0 + rho * rho - 2.0 * mass * std::pow(rho, 2 - n); };
    double lo = 1e-8, hi = 1.0;
    while (f(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

StaticTriple schwarzschild_ads(int n, double mass, const RadialGrid& grid) {
    if (n < 3) throw std::invalid_argument("schwarzschild_ads: dimension must be at least 3");
    if (mass < 0.0) throw std::invalid_argument("schwarzschild_ads: mass must be nonnegative");
    const double rh = horizon_radius(n, mass);
    if (grid.r_min < 1.05 * rh)
        throw std::domain_error("schwarzschild_ads: grid reaches inside 1.05 x horizon radius " +
                                std::to_string(rh));
    auto lapse_sq = [&](double rho) { return 1.0 + rho * rho - 2.0 * mass * std::pow(rho, 2 - n); };
    Profile A(grid, [&](double rho) { return 1.0 / lapse_sq(rho); });
    Profile B(grid, [](double rho) { return rho * rho; });
    Profile V(grid, [&](double rho) { return std::sqrt(lapse_sq(rho)); });
    StaticTriple t(RotSymMetric(n, std::move(A), std::move(B)), std::move(V));
    t.validate();
    return t;
}

StaticTriple perturb(const StaticTriple& t, const PerturbationSpec& p) {
    p.validate();
    t.validate();
    StaticTriple out = t;
    Profile* target = nullptr;
    switch (p.target) {
        case PerturbationSpec::Target::A: target = &out.metric.A; break;
        case PerturbationSpec::Target::B: target = &out.metric.B; break;
        case PerturbationSpec::Target::V: target = &out.V; break;
    }
    for (std::size_t i = 0; i < target->size(); ++i) {
        const double factor = 1.0 + p.bump(t.grid().node(i));
        (*target)[i] *= factor;
        if (!((*target)[i] > 0.0))
            throw std::domain_error("perturb: positivity lost at node " + std::to_string(i));
    }
    return out;
}

} // namespace staticflow
