#pragma once

#include "staticflow/metric.hpp"

#include <cmath>

namespace staticflow {

/// Multiplicative bump 1 + eps * exp(-mu (r-r0)^2 / w^2) * exp(-mu max(r-r0, 0))
/// applied to one of the three profiles. The outward tail decays like
/// exp(-mu r), matching the decay class of the flow monitors.
struct PerturbationSpec {
    double amplitude = 0.0;
    double center = 0.0;
    double width = 1.0;
    double decay = 2.0;
    enum class Target { A, B, V } target = Target::B;

    void validate() const {
        if (!(width > 0.0)) throw std::invalid_argument("PerturbationSpec: width must be positive");
        if (!(std::abs(amplitude) < 0.5))
            throw std::invalid_argument("PerturbationSpec: |amplitude| must be below 0.5");
    }

    double bump(double r) const {
        const double d = r - center;
        const double tail = d > 0.0 ? d : 0.0;
        return amplitude * std::exp(-decay * d * d / (width * width)) * std::exp(-decay * tail);
    }
};

/// Anti-de Sitter fixture: A = 1, B = sinh^2 r, V = cosh r.
StaticTriple ads(int n, const RadialGrid& grid);

/// Schwarzschild-AdS in the area-radius gauge: V^2 = 1 + rho^2 - 2 m rho^{2-n},
/// A = V^{-2}, B = rho^2. The grid must stay outside 1.05 x the horizon radius.
StaticTriple schwarzschild_ads(int n, double mass, const RadialGrid& grid);

/// Largest root of 1 + rho^2 - 2 m rho^{2-n} = 0.
double horizon_radius(int n, double mass);

/// Multiplies the target profile by the bump factor. Identity at amplitude 0.
StaticTriple perturb(const StaticTriple& t, const PerturbationSpec& p);

} // namespace staticflow
