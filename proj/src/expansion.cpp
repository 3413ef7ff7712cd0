#include "staticflow/expansion.hpp"

#include <cmath>
#include <string>

namespace staticflow {

std::pair<TruncatedSeries, TruncatedSeries> reduce_equations(const EinsteinBoundary& b,
                                                             const TruncatedSeries& c,
                                                             const TruncatedSeries& u) {
    if (c.order() != u.order())
        throw std::invalid_argument("reduce_equations: series must share the working order");
    if (c[0] != 1.0 || u[0] != 1.0)
        throw std::invalid_argument("reduce_equations: c and u must have unit constant term");

    const double n = static_cast<double>(b.n);
    const double S = b.scal;

    const TruncatedSeries c1 = c.derivative();
    const TruncatedSeries c2 = c1.derivative();
    const TruncatedSeries u1 = u.derivative();
    const TruncatedSeries u2 = u1.derivative();

    // tau u c'' + 2(1-n) u c' + (n-3)/2 tau u c'^2/c - 2S/(n-1) tau u
    //   - 2 c u' + tau c' u'
    const TruncatedSeries Eg = (u * c2).shift_up() + 2.0 * (1.0 - n) * (u * c1) +
                               0.5 * (n - 3.0) * ((u * ((c1 * c1) / c)).shift_up()) -
                               (2.0 * S / (n - 1.0)) * u.shift_up() - 2.0 * (c * u1) +
                               (c1 * u1).shift_up();

    // tau u'' - n u' + (n-1)/2 (c'/c) (tau u' - u)
    const TruncatedSeries Eu =
        u2.shift_up() - n * u1 + 0.5 * (n - 1.0) * ((c1 / c) * (u1.shift_up() - u));

    return {Eg, Eu};
}

double solvability_determinant(int n, int m) {
    if (m < 1 || m > n) throw std::invalid_argument("solvability_determinant: need 1 <= m <= n");
    const double dm = m, dn = n;
    return (dm - 2.0 * dn + 1.0) * (dm - dn - 1.0) - (dn - 1.0);
}

std::pair<double, double> closed_form_order2(const EinsteinBoundary& b) {
    const double n = static_cast<double>(b.n);
    const double u2 = b.scal / (4.0 * (n - 1.0) * (n - 2.0));
    const double c2 = b.scal / (2.0 * (2.0 - n) * (n - 1.0));
    return {u2, c2};
}

ExpansionResult expand(const EinsteinBoundary& b, std::size_t order) {
    if (order > static_cast<std::size_t>(b.n - 1))
        throw std::invalid_argument("expand: orders at and beyond n are not determined by the boundary");

    const std::size_t W = static_cast<std::size_t>(b.n); // room to probe order n
    ExpansionResult res;
    res.n = b.n;
    res.scal = b.scal;
    res.c = TruncatedSeries(W);
    res.u = TruncatedSeries(W);
    res.c.at(0) = 1.0;
    res.u.at(0) = 1.0;
    res.max_order = order;
    res.determinants.resize(static_cast<std::size_t>(b.n));

    for (std::size_t m = 1; m <= static_cast<std::size_t>(b.n); ++m) {
        auto residual_at = [&](double cm, double um) {
            TruncatedSeries c = res.c, u = res.u;
            c.at(m) = cm;
            u.at(m) = um;
            const auto [Eg, Eu] = reduce_equations(b, c, u);
            return std::pair<double, double>(Eg[m - 1], Eu[m - 1]);
        };
        const auto [g0, h0] = residual_at(0.0, 0.0);
        const auto [gc, hc] = residual_at(1.0, 0.0);
        const auto [gu, hu] = residual_at(0.0, 1.0);

        // columns of the probed 2x2 system in (c_m, u_m)
        const double a11 = gc - g0, a12 = gu - g0;
        const double a21 = hc - h0, a22 = hu - h0;
        const double det = a11 * a22 - a12 * a21;
        res.determinants[m - 1] = det / (static_cast<double>(m) * static_cast<double>(m));

        if (m <= order) {
            if (std::abs(res.determinants[m - 1]) < 1e-9)
                throw std::domain_error("expand: degenerate system at order " + std::to_string(m));
            res.c.at(m) = (-g0 * a22 + h0 * a12) / det;
            res.u.at(m) = (-h0 * a11 + g0 * a21) / det;
        }
    }
    // drop the scratch slot used only for probing order n
    res.c = res.c.truncated(std::max<std::size_t>(order, 1));
    res.u = res.u.truncated(std::max<std::size_t>(order, 1));
    return res;
}

std::pair<TruncatedSeries, TruncatedSeries> special_gauge_of_ads(int n, std::size_t order) {
    if (n < 3) throw std::invalid_argument("special_gauge_of_ads: dimension must be at least 3");
    if (order < 2) throw std::invalid_argument("special_gauge_of_ads: need order at least 2");
    TruncatedSeries c(order), u(order);
    c.at(0) = 1.0;
    c.at(2) = -0.5;
    if (order >= 4) c.at(4) = 0.0625;
    u.at(0) = 1.0;
    u.at(2) = 0.25;
    return {c, u};
}

bool parity_check(const ExpansionResult& res, double tol) {
    for (std::size_t k = 1; k <= res.max_order; k += 2)
        if (std::abs(res.c[k]) > tol || std::abs(res.u[k]) > tol) return false;
    return true;
}

StaticTriple reconstruct(const ExpansionResult& res, const RadialGrid& tau_grid) {
    const double lambda = res.scal / static_cast<double>(res.n - 1);
    std::vector<double> A(tau_grid.count), B(tau_grid.count), V(tau_grid.count);
    for (std::size_t i = 0; i < tau_grid.count; ++i) {
        const double tau = tau_grid.node(i);
        const double cval = res.c.evaluate(tau);
        if (!(cval > 0.0))
            throw std::domain_error("reconstruct: conformal factor vanishes at tau = " +
                                    std::to_string(tau));
        A[i] = 1.0 / (tau * tau);
        B[i] = cval / (tau * tau);
        V[i] = res.u.evaluate(tau) / tau;
    }
    StaticTriple t(RotSymMetric(res.n, Profile(tau_grid, std::move(A)),
                                Profile(tau_grid, std::move(B)), lambda),
                   Profile(tau_grid, std::move(V)));
    t.validate();
    return t;
}

} // namespace staticflow
