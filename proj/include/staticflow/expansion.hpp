#pragma once

#include "staticflow/metric.hpp"
#include "staticflow/series.hpp"

namespace staticflow {

/// Boundary data for the expansion: bulk dimension n and the (constant)
/// scalar curvature of the (n-1)-dimensional Einstein boundary metric,
/// Ric(hat g) = [scal/(n-1)] hat g.
struct EinsteinBoundary {
    int n = 0;
    double scal = 0.0;

    EinsteinBoundary(int dim, double s) : n(dim), scal(s) {
        if (n < 3) throw std::invalid_argument("EinsteinBoundary: dimension must be at least 3");
    }

    /// Boundary scalar curvature of the unit round sphere fixture.
    static double sphere_scal(int n) { return static_cast<double>((n - 1) * (n - 2)); }
};

struct ExpansionResult {
    int n = 0;
    double scal = 0.0;
    TruncatedSeries c;                 // conformal factor, g_tau = c(tau) hat g
    TruncatedSeries u;                 // rescaled lapse, u = tau V
    std::size_t max_order = 0;         // highest coefficient actually solved
    std::vector<double> determinants;  // solvability determinant at orders m = 1..n
};

/// Scalar reductions of the two decomposed static equations under
/// g_tau = c(tau) hat g with an Einstein boundary. Both residual series vanish
/// identically through the working order exactly when (c, u) solve the
/// expansion equations.
std::pair<TruncatedSeries, TruncatedSeries> reduce_equations(const EinsteinBoundary& b,
                                                             const TruncatedSeries& c,
                                                             const TruncatedSeries& u);

/// Solves the expansion order by order up to M <= n-1. Each order inverts a
/// 2x2 linear system probed out of reduce_equations; the determinant ladder is
/// recorded through order n, where the system degenerates.
ExpansionResult expand(const EinsteinBoundary& b, std::size_t order);

/// Closed forms for the Taylor coefficients at order two.
std::pair<double, double> closed_form_order2(const EinsteinBoundary& b); // (u2, c2)

/// Determinant of [[m-2n+1, -2], [-(n-1)/2, m-1-n]].
double solvability_determinant(int n, int m);

/// Exact AdS expansion in the special boundary gauge: c = (1 - tau^2/4)^2,
/// u = 1 + tau^2/4. Independent oracle for expand on the sphere boundary.
std::pair<TruncatedSeries, TruncatedSeries> special_gauge_of_ads(int n, std::size_t order);

/// True iff all odd coefficients of c and u vanish below the solved order.
bool parity_check(const ExpansionResult& res, double tol = 1e-12);

/// Bulk triple in the radial coordinate tau: A = tau^-2, B = tau^-2 c(tau),
/// V = u(tau)/tau, with the fiber Einstein constant scal/(n-1).
StaticTriple reconstruct(const ExpansionResult& res, const RadialGrid& tau_grid);

} // namespace staticflow
