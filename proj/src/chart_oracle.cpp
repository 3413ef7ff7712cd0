#include "staticflow/chart_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace staticflow {

namespace {

struct ChainFuncs {
    double s, ds, dds; // s(phi), s'(phi), s''(phi)
};

ChainFuncs chain_funcs(DiagonalChart::Fiber fiber, double phi) {
    switch (fiber) {
        case DiagonalChart::Fiber::sphere: return {std::sin(phi), std::cos(phi), -std::sin(phi)};
        case DiagonalChart::Fiber::hyperbolic: return {std::sinh(phi), std::cosh(phi), std::sinh(phi)};
        case DiagonalChart::Fiber::flat: return {1.0, 0.0, 0.0};
    }
    throw std::logic_error("chart: unknown fiber kind");
}

// Everything the pointwise assembly needs at one node: component values and
// their first/second coordinate derivatives.
struct PointData {
    std::size_t N;
    std::vector<double> g;    // g[c]
    std::vector<double> D;    // D[a*N + c] = partial_a g_c
    std::vector<double> DD;   // DD[(a*N + b)*N + c] = partial_a partial_b g_c

    double d(int a, int c) const { return D[static_cast<std::size_t>(a) * N + c]; }
    double dd(int a, int b, int c) const {
        return DD[(static_cast<std::size_t>(a) * N + b) * N + c];
    }
};

PointData assemble_point(const DiagonalChart& chart, std::size_t node,
                         const std::vector<std::vector<double>>& d1r,
                         const std::vector<std::vector<double>>& d2r) {
    const std::size_t N = chart.dim();
    PointData p;
    p.N = N;
    p.g.assign(N, 0.0);
    p.D.assign(N * N, 0.0);
    p.DD.assign(N * N * N, 0.0);

    for (std::size_t c = 0; c < N; ++c) {
        const auto& comp = chart.comp[c];
        double T = 1.0;
        std::vector<double> logd(N, 0.0);  // dT/dphi_mu / T
        std::vector<double> logdd(N, 0.0); // d^2T/dphi_mu^2 / T
        for (int mu : comp.chain) {
            const ChainFuncs f = chain_funcs(chart.fiber, chart.angles[static_cast<std::size_t>(mu)]);
            T *= f.s * f.s;
            logd[static_cast<std::size_t>(mu)] = 2.0 * f.ds / f.s;
            logdd[static_cast<std::size_t>(mu)] = 2.0 * (f.ds * f.ds + f.s * f.dds) / (f.s * f.s);
        }
        const double R = comp.radial[node];
        const double R1 = d1r[c][node];
        const double R2 = d2r[c][node];

        p.g[c] = R * T;
        p.D[0 * N + c] = R1 * T;
        p.DD[(0 * N + 0) * N + c] = R2 * T;
        for (std::size_t mu = 1; mu < N; ++mu) {
            const double lm = logd[mu];
            if (lm == 0.0 && logdd[mu] == 0.0) continue;
            p.D[mu * N + c] = R * T * lm;
            p.DD[(0 * N + mu) * N + c] = R1 * T * lm;
            p.DD[(mu * N + 0) * N + c] = R1 * T * lm;
            for (std::size_t nu = 1; nu < N; ++nu) {
                if (nu == mu)
                    p.DD[(mu * N + mu) * N + c] = R * T * logdd[mu];
                else if (logd[nu] != 0.0)
                    p.DD[(mu * N + nu) * N + c] = R * T * lm * logd[nu];
            }
        }
    }
    return p;
}

double christoffel(const PointData& p, int c, int a, int b) {
    const double inv = 1.0 / p.g[static_cast<std::size_t>(c)];
    double v = 0.0;
    if (b == c) v += p.d(a, c);
    if (a == c) v += p.d(b, c);
    if (a == b) v -= p.d(c, a);
    return 0.5 * inv * v;
}

double christoffel_deriv(const PointData& p, int m, int c, int a, int b) {
    const double gc = p.g[static_cast<std::size_t>(c)];
    const double inv = 1.0 / gc;
    double v = 0.0, dv = 0.0;
    if (b == c) {
        v += p.d(a, c);
        dv += p.dd(m, a, c);
    }
    if (a == c) {
        v += p.d(b, c);
        dv += p.dd(m, b, c);
    }
    if (a == b) {
        v -= p.d(c, a);
        dv -= p.dd(m, c, a);
    }
    return 0.5 * (-inv * inv * p.d(m, c) * v + inv * dv);
}

void radial_derivatives(const DiagonalChart& chart, std::vector<std::vector<double>>& d1r,
                        std::vector<std::vector<double>>& d2r) {
    const std::size_t N = chart.dim();
    const double h = chart.grid.spacing();
    d1r.resize(N);
    d2r.resize(N);
    for (std::size_t c = 0; c < N; ++c) {
        stencil::d1(chart.comp[c].radial, h, d1r[c]);
        stencil::d2(chart.comp[c].radial, h, d2r[c]);
    }
}

} // namespace

DiagonalChart metric_chart(const RotSymMetric& g) {
    g.validate();
    const std::size_t N = static_cast<std::size_t>(g.n);
    DiagonalChart chart;
    chart.grid = g.grid();
    chart.comp.resize(N);
    chart.angles.assign(N, 0.0);
    for (std::size_t a = 1; a < N; ++a) chart.angles[a] = 0.7 + 0.13 * static_cast<double>(a);

    double fiber_scale = 1.0;
    if (g.fiber_ric > 0.0) {
        chart.fiber = DiagonalChart::Fiber::sphere;
        fiber_scale = static_cast<double>(g.n - 2) / g.fiber_ric;
    } else if (g.fiber_ric < 0.0) {
        chart.fiber = DiagonalChart::Fiber::hyperbolic;
        fiber_scale = static_cast<double>(g.n - 2) / (-g.fiber_ric);
    } else {
        chart.fiber = DiagonalChart::Fiber::flat;
    }

    chart.comp[0].radial = g.A.values;
    for (std::size_t k = 1; k < N; ++k) {
        chart.comp[k].radial.resize(chart.grid.count);
        for (std::size_t i = 0; i < chart.grid.count; ++i)
            chart.comp[k].radial[i] = g.B.values[i] * fiber_scale;
        for (std::size_t j = 1; j < k; ++j) chart.comp[k].chain.push_back(static_cast<int>(j));
    }
    return chart;
}

DiagonalChart lift_chart(const StaticTriple& t) {
    t.validate();
    const RotSymMetric& g = t.metric;
    const std::size_t N = static_cast<std::size_t>(g.n) + 1;
    DiagonalChart chart;
    chart.grid = g.grid();
    chart.comp.resize(N);
    chart.angles.assign(N, 0.0);
    for (std::size_t a = 2; a < N; ++a) chart.angles[a] = 0.7 + 0.13 * static_cast<double>(a);

    double fiber_scale = 1.0;
    if (g.fiber_ric > 0.0) {
        chart.fiber = DiagonalChart::Fiber::sphere;
        fiber_scale = static_cast<double>(g.n - 2) / g.fiber_ric;
    } else if (g.fiber_ric < 0.0) {
        chart.fiber = DiagonalChart::Fiber::hyperbolic;
        fiber_scale = static_cast<double>(g.n - 2) / (-g.fiber_ric);
    } else {
        chart.fiber = DiagonalChart::Fiber::flat;
    }

    chart.comp[0].radial = g.A.values;
    chart.comp[1].radial.resize(chart.grid.count); // theta direction, V^2
    for (std::size_t i = 0; i < chart.grid.count; ++i)
        chart.comp[1].radial[i] = t.V.values[i] * t.V.values[i];
    for (std::size_t k = 2; k < N; ++k) {
        chart.comp[k].radial.resize(chart.grid.count);
        for (std::size_t i = 0; i < chart.grid.count; ++i)
            chart.comp[k].radial[i] = g.B.values[i] * fiber_scale;
        for (std::size_t j = 2; j < k; ++j) chart.comp[k].chain.push_back(static_cast<int>(j));
    }
    return chart;
}

double oracle_christoffel(const DiagonalChart& chart, std::size_t node, int c, int a, int b) {
    std::vector<std::vector<double>> d1r, d2r;
    radial_derivatives(chart, d1r, d2r);
    return christoffel(assemble_point(chart, node, d1r, d2r), c, a, b);
}

namespace {

std::vector<double> ricci_diag_at(const PointData& p) {
    const int N = static_cast<int>(p.N);
    std::vector<double> ric(p.N, 0.0);
    for (int j = 0; j < N; ++j) {
        const int l = j;
        double v = 0.0;
        for (int i = 0; i < N; ++i) {
            v += christoffel_deriv(p, i, i, j, l);
            v -= christoffel_deriv(p, j, i, i, l);
        }
        for (int i = 0; i < N; ++i) {
            for (int q = 0; q < N; ++q) {
                v += christoffel(p, i, i, q) * christoffel(p, q, j, l);
                v -= christoffel(p, i, j, q) * christoffel(p, q, i, l);
            }
        }
        ric[static_cast<std::size_t>(j)] = v;
    }
    return ric;
}

} // namespace

std::vector<double> oracle_ricci_diag(const DiagonalChart& chart, std::size_t node) {
    std::vector<std::vector<double>> d1r, d2r;
    radial_derivatives(chart, d1r, d2r);
    return ricci_diag_at(assemble_point(chart, node, d1r, d2r));
}

std::vector<std::vector<double>> oracle_ricci_diag_all(const DiagonalChart& chart) {
    std::vector<std::vector<double>> d1r, d2r;
    radial_derivatives(chart, d1r, d2r);
    std::vector<std::vector<double>> out(chart.dim());
    for (auto& v : out) v.resize(chart.grid.count);
    for (std::size_t i = 0; i < chart.grid.count; ++i) {
        const std::vector<double> ric = ricci_diag_at(assemble_point(chart, i, d1r, d2r));
        for (std::size_t c = 0; c < chart.dim(); ++c) out[c][i] = ric[c];
    }
    return out;
}

} // namespace staticflow
