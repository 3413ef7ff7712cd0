#pragma once

#include "staticflow/grid.hpp"

namespace staticflow {

/// Rotationally symmetric metric g = A(r) dr^2 + B(r) sigma, where sigma is
/// an Einstein fiber metric of dimension n-1. The default fiber is the unit
/// round sphere, Ric(sigma) = (n-2) sigma; reconstructions from boundary data
/// with scal != (n-1)(n-2) carry a different fiber Einstein constant.
struct RotSymMetric {
    int n = 0;
    Profile A;
    Profile B;
    double fiber_ric = 0.0; // lambda with Ric(sigma) = lambda * sigma

    RotSymMetric() = default;
    RotSymMetric(int dim, Profile a, Profile b)
        : n(dim), A(std::move(a)), B(std::move(b)), fiber_ric(static_cast<double>(dim - 2)) {}
    RotSymMetric(int dim, Profile a, Profile b, double lambda)
        : n(dim), A(std::move(a)), B(std::move(b)), fiber_ric(lambda) {}

    const RadialGrid& grid() const { return A.grid; }

    void validate() const {
        if (n < 3) throw std::invalid_argument("RotSymMetric: dimension must be at least 3");
        require_same_grid(A, B, "RotSymMetric");
        if (!A.all_positive() || !B.all_positive())
            throw std::domain_error("RotSymMetric: signature violation, A and B must be positive");
        if (!A.all_finite() || !B.all_finite())
            throw std::domain_error("RotSymMetric: non-finite coefficient sample");
    }

    /// Fiber sectional curvature, defined for constant-curvature fibers.
    double fiber_sectional() const { return fiber_ric / static_cast<double>(n - 2); }
};

/// Candidate static vacuum: metric plus a positive lapse profile.
struct StaticTriple {
    RotSymMetric metric;
    Profile V;

    StaticTriple() = default;
    StaticTriple(RotSymMetric g, Profile lapse) : metric(std::move(g)), V(std::move(lapse)) {}

    const RadialGrid& grid() const { return metric.grid(); }

    void validate() const {
        metric.validate();
        require_same_grid(metric.A, V, "StaticTriple");
        if (!V.all_positive()) throw std::domain_error("StaticTriple: lapse violation, V must be positive");
        if (!V.all_finite()) throw std::domain_error("StaticTriple: non-finite lapse sample");
    }
};

/// Ricci data of a rotationally symmetric metric: the dr^2 x dr^2 component,
/// the coefficient multiplying the fiber metric, and the scalar curvature.
/// scal is assembled as the g-trace of the two components, so the trace
/// identity holds by construction.
struct CurvatureComponents {
    Profile ric_rr;
    Profile ric_sph;
    Profile scal;
};

} // namespace staticflow
