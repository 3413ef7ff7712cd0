#pragma once

#include "staticflow/metric.hpp"

#include <vector>

namespace staticflow {

/// Coordinate-chart view of a diagonal metric whose components separate as
/// radial(r) * angular(transverse coordinates). Coordinate 0 is radial; all
/// radial factors are sampled on the grid and differentiated by second-order
/// finite differences, while the angular chains are exact.
///
/// Curvature assembled from this chart goes through the generic coordinate
/// formulas (Christoffel symbols of a diagonal metric, then the Ricci
/// contraction), a path that never sees the warped-product reductions used
/// by the geometry operators. It serves as their cross-check.
struct DiagonalChart {
    enum class Fiber { sphere, flat, hyperbolic };

    struct Component {
        std::vector<double> radial;
        std::vector<int> chain; // transverse coordinates contributing an s(phi)^2 factor
    };

    RadialGrid grid;
    Fiber fiber = Fiber::sphere;
    std::vector<Component> comp;    // comp[0] multiplies dr^2
    std::vector<double> angles;     // base point; angles[0] unused

    std::size_t dim() const { return comp.size(); }
};

/// Chart of g itself in (r, fiber angles).
DiagonalChart metric_chart(const RotSymMetric& g);

/// Chart of the circle lift V^2 dtheta^2 + g in (r, theta, fiber angles).
DiagonalChart lift_chart(const StaticTriple& t);

/// Christoffel symbols Gamma^c_{ab} at one grid node.
double oracle_christoffel(const DiagonalChart& chart, std::size_t node, int c, int a, int b);

/// Diagonal Ricci entries Ric_{aa} at one grid node, index-aligned with the
/// chart coordinates.
std::vector<double> oracle_ricci_diag(const DiagonalChart& chart, std::size_t node);

/// Diagonal Ricci entries at every node; result[c][i] is Ric_{cc} at node i.
std::vector<std::vector<double>> oracle_ricci_diag_all(const DiagonalChart& chart);

} // namespace staticflow
