#include "staticflow/geometry.hpp"

#include "staticflow/chart_oracle.hpp"

#include <cmath>

namespace staticflow {

namespace {

struct MetricDerivs {
    std::vector<double> da, db, d2b; // log-derivatives of A and B
};

MetricDerivs metric_derivs(const RotSymMetric& g) {
    MetricDerivs d;
    const double h = g.grid().spacing();
    stencil::log_d1(g.A.values, h, d.da);
    stencil::log_d1(g.B.values, h, d.db);
    stencil::log_d2(g.B.values, h, d.d2b);
    return d;
}

} // namespace

CurvatureComponents ricci(const RotSymMetric& g) {
    g.validate();
    const MetricDerivs d = metric_derivs(g);
    const std::size_t count = g.grid().count;
    const double nm1 = static_cast<double>(g.n - 1);
    const double nm3 = static_cast<double>(g.n - 3);

    CurvatureComponents out;
    out.ric_rr = Profile(g.grid(), std::vector<double>(count));
    out.ric_sph = Profile(g.grid(), std::vector<double>(count));
    out.scal = Profile(g.grid(), std::vector<double>(count));
    for (std::size_t i = 0; i < count; ++i) {
        const double a1 = d.da[i], b1 = d.db[i], b2 = d.d2b[i];
        const double P = 0.5 * b2 + 0.25 * b1 * b1 - 0.25 * a1 * b1;
        const double Q = -0.5 * (b2 + b1 * b1) + 0.25 * a1 * b1 - 0.25 * nm3 * b1 * b1;
        out.ric_rr[i] = -nm1 * P;
        out.ric_sph[i] = (g.B[i] / g.A[i]) * Q + g.fiber_ric;
        out.scal[i] = out.ric_rr[i] / g.A[i] + nm1 * out.ric_sph[i] / g.B[i];
    }
    return out;
}

HessianComponents hessian_radial(const RotSymMetric& g, const Profile& f) {
    g.validate();
    require_same_grid(g.A, f, "hessian_radial");
    const double h = g.grid().spacing();
    std::vector<double> da, db, f1, f2;
    stencil::log_d1(g.A.values, h, da);
    stencil::log_d1(g.B.values, h, db);
    stencil::d1(f.values, h, f1);
    stencil::d2(f.values, h, f2);

    HessianComponents out;
    out.rr = Profile(g.grid(), std::vector<double>(g.grid().count));
    out.sph = Profile(g.grid(), std::vector<double>(g.grid().count));
    for (std::size_t i = 0; i < g.grid().count; ++i) {
        out.rr[i] = f2[i] - 0.5 * da[i] * f1[i];
        out.sph[i] = 0.5 * (g.B[i] / g.A[i]) * db[i] * f1[i];
    }
    return out;
}

Profile laplacian_radial(const RotSymMetric& g, const Profile& f) {
    const HessianComponents hess = hessian_radial(g, f);
    Profile out(g.grid(), std::vector<double>(g.grid().count));
    const double nm1 = static_cast<double>(g.n - 1);
    for (std::size_t i = 0; i < g.grid().count; ++i)
        out[i] = hess.rr[i] / g.A[i] + nm1 * hess.sph[i] / g.B[i];
    return out;
}

StaticResidual static_residual(const StaticTriple& t) {
    t.validate();
    const RotSymMetric& g = t.metric;
    const double h = g.grid().spacing();
    const std::size_t count = g.grid().count;
    const double n = static_cast<double>(g.n);
    const double nm1 = n - 1.0;
    const double nm3 = n - 3.0;

    std::vector<double> da, db, d2b, dv, d2v;
    stencil::log_d1(g.A.values, h, da);
    stencil::log_d1(g.B.values, h, db);
    stencil::log_d2(g.B.values, h, d2b);
    stencil::log_d1(t.V.values, h, dv);
    stencil::log_d2(t.V.values, h, d2v);

    StaticResidual res;
    res.tensor_rr = Profile(g.grid(), std::vector<double>(count));
    res.tensor_sph = Profile(g.grid(), std::vector<double>(count));
    res.scalar = Profile(g.grid(), std::vector<double>(count));
    for (std::size_t i = 0; i < count; ++i) {
        const double a1 = da[i], b1 = db[i], b2 = d2b[i], v1 = dv[i], v2 = d2v[i];
        const double BA = g.B[i] / g.A[i];
        const double ric_rr = -nm1 * (0.5 * b2 + 0.25 * b1 * b1 - 0.25 * a1 * b1);
        const double ric_sph =
            BA * (-0.5 * (b2 + b1 * b1) + 0.25 * a1 * b1 - 0.25 * nm3 * b1 * b1) + g.fiber_ric;
        const double hess_rr_over_v = v2 + v1 * v1 - 0.5 * a1 * v1;
        const double hess_sph_over_v = 0.5 * BA * b1 * v1;
        const double lap_over_v = (hess_rr_over_v + nm1 * 0.5 * b1 * v1) / g.A[i];

        res.tensor_rr[i] = ric_rr + n * g.A[i] - hess_rr_over_v;
        res.tensor_sph[i] = ric_sph + n * g.B[i] - hess_sph_over_v;
        res.scalar[i] = t.V[i] * (lap_over_v - n);
    }
    return res;
}

Profile tensor_norm(const RotSymMetric& g, const Profile& t_rr, const Profile& t_sph) {
    require_same_grid(t_rr, t_sph, "tensor_norm");
    require_same_grid(g.A, t_rr, "tensor_norm");
    Profile out(g.grid(), std::vector<double>(g.grid().count));
    const double nm1 = static_cast<double>(g.n - 1);
    for (std::size_t i = 0; i < g.grid().count; ++i) {
        const double frr = t_rr[i] / g.A[i];
        const double fsph = t_sph[i] / g.B[i];
        out[i] = std::sqrt(frr * frr + nm1 * fsph * fsph);
    }
    return out;
}

ResidualNorms residual_norms(const StaticTriple& t, const StaticResidual& res) {
    const Profile norm = tensor_norm(t.metric, res.tensor_rr, res.tensor_sph);
    ResidualNorms out;
    for (std::size_t i = 0; i < norm.size(); ++i) {
        out.tensor_sup = std::max(out.tensor_sup, std::abs(norm[i]));
        out.scalar_sup = std::max(out.scalar_sup, std::abs(res.scalar[i]) / t.V[i]);
    }
    return out;
}

ResidualNorms residual_norms(const StaticTriple& t) { return residual_norms(t, static_residual(t)); }

Profile sectional_defect(const RotSymMetric& g) {
    g.validate();
    const MetricDerivs d = metric_derivs(g);
    const double kf = g.fiber_sectional();
    Profile out(g.grid(), std::vector<double>(g.grid().count));
    for (std::size_t i = 0; i < g.grid().count; ++i) {
        const double a1 = d.da[i], b1 = d.db[i], b2 = d.d2b[i];
        const double k_rad = -(0.5 * b2 + 0.25 * b1 * b1 - 0.25 * a1 * b1) / g.A[i];
        const double k_tan = kf / g.B[i] - 0.25 * b1 * b1 / g.A[i];
        out[i] = std::max(std::abs(k_rad + 1.0), std::abs(k_tan + 1.0));
    }
    return out;
}

AsDefect as_defect(const StaticTriple& t, double a) {
    if (!(a >= 2.0)) throw std::invalid_argument("as_defect: decay order must be at least 2");
    t.validate();
    const RotSymMetric& g = t.metric;
    const double h = g.grid().spacing();
    const std::size_t count = g.grid().count;
    const double n = static_cast<double>(g.n);
    const double nm1 = n - 1.0;

    std::vector<double> da, db, dv, d2v;
    stencil::log_d1(g.A.values, h, da);
    stencil::log_d1(g.B.values, h, db);
    stencil::log_d1(t.V.values, h, dv);
    stencil::log_d2(t.V.values, h, d2v);

    const StaticResidual res = static_residual(t);
    const Profile norm = tensor_norm(g, res.tensor_rr, res.tensor_sph);

    std::vector<double> lap_over_v(count);
    for (std::size_t i = 0; i < count; ++i)
        lap_over_v[i] = (d2v[i] + dv[i] * dv[i] - 0.5 * da[i] * dv[i] + 0.5 * nm1 * db[i] * dv[i]) / g.A[i];

    std::vector<double> grad;
    stencil::d1(lap_over_v, h, grad);

    AsDefect out;
    for (std::size_t i = 0; i < count; ++i) {
        const double r = g.grid().node(i);
        out.d2 = std::max(out.d2, std::exp(2.0 * r) * norm[i]);
        out.da = std::max(out.da, std::exp(a * r) * std::abs(grad[i]) / std::sqrt(g.A[i]));
    }
    return out;
}

Profile deturck_field(const RotSymMetric& g, const RotSymMetric& g_hat) {
    g.validate();
    g_hat.validate();
    require_same_grid(g.A, g_hat.A, "deturck_field");
    if (g.n != g_hat.n) throw std::invalid_argument("deturck_field: dimension mismatch");
    const double h = g.grid().spacing();
    const std::size_t count = g.grid().count;
    const double nm1 = static_cast<double>(g.n - 1);

    std::vector<double> da, db, dah, dbh;
    stencil::log_d1(g.A.values, h, da);
    stencil::log_d1(g.B.values, h, db);
    stencil::log_d1(g_hat.A.values, h, dah);
    stencil::log_d1(g_hat.B.values, h, dbh);

    Profile w(g.grid(), std::vector<double>(count));
    for (std::size_t i = 0; i < count; ++i) {
        const double ratio = (g_hat.B[i] * g.A[i]) / (g.B[i] * g_hat.A[i]);
        w[i] = (0.5 * (da[i] - dah[i]) + 0.5 * nm1 * (ratio * dbh[i] - db[i])) / g.A[i];
    }
    return w;
}

LieComponents lie_derivative_radial(const RotSymMetric& g, const Profile& w) {
    g.validate();
    require_same_grid(g.A, w, "lie_derivative_radial");
    const double h = g.grid().spacing();
    std::vector<double> da, db, dw;
    stencil::log_d1(g.A.values, h, da);
    stencil::log_d1(g.B.values, h, db);
    stencil::d1(w.values, h, dw);

    LieComponents out;
    out.rr = Profile(g.grid(), std::vector<double>(g.grid().count));
    out.sph = Profile(g.grid(), std::vector<double>(g.grid().count));
    for (std::size_t i = 0; i < g.grid().count; ++i) {
        out.rr[i] = g.A[i] * (w[i] * da[i] + 2.0 * dw[i]);
        out.sph[i] = w[i] * g.B[i] * db[i];
    }
    return out;
}

LiftBlockResidual lift_block_check(const StaticTriple& t) {
    t.validate();
    const RotSymMetric& g = t.metric;
    const std::size_t count = g.grid().count;
    const double h = g.grid().spacing();
    const double n = static_cast<double>(g.n);
    const double nm1 = n - 1.0;
    const double nm3 = n - 3.0;

    const std::vector<std::vector<double>> ric_h = oracle_ricci_diag_all(lift_chart(t));

    std::vector<double> da, db, d2b, dv, d2v;
    stencil::log_d1(g.A.values, h, da);
    stencil::log_d1(g.B.values, h, db);
    stencil::log_d2(g.B.values, h, d2b);
    stencil::log_d1(t.V.values, h, dv);
    stencil::log_d2(t.V.values, h, d2v);

    const double fiber_scale = g.fiber_ric == 0.0 ? 1.0 : static_cast<double>(g.n - 2) / std::abs(g.fiber_ric);

    LiftBlockResidual out;
    out.theta = Profile(g.grid(), std::vector<double>(count));
    out.rr = Profile(g.grid(), std::vector<double>(count));
    out.sph = Profile(g.grid(), std::vector<double>(count));
    for (std::size_t i = 0; i < count; ++i) {
        const double a1 = da[i], b1 = db[i], b2 = d2b[i], v1 = dv[i], v2 = d2v[i];
        const double BA = g.B[i] / g.A[i];
        const double ric_rr = -nm1 * (0.5 * b2 + 0.25 * b1 * b1 - 0.25 * a1 * b1);
        const double ric_sph =
            BA * (-0.5 * (b2 + b1 * b1) + 0.25 * a1 * b1 - 0.25 * nm3 * b1 * b1) + g.fiber_ric;
        const double hess_rr_over_v = v2 + v1 * v1 - 0.5 * a1 * v1;
        const double hess_sph_over_v = 0.5 * BA * b1 * v1;
        const double lap_over_v = (hess_rr_over_v + nm1 * 0.5 * b1 * v1) / g.A[i];

        const double vsq = t.V[i] * t.V[i];
        out.theta[i] = std::abs(ric_h[1][i] / vsq + lap_over_v);
        out.rr[i] = std::abs(ric_h[0][i] - (ric_rr - hess_rr_over_v)) / g.A[i];
        // the chart carries the fiber at unit normalization, so rescale its
        // sphere block back to the B sigma convention before comparing
        out.sph[i] = std::abs(ric_h[2][i] / fiber_scale - (ric_sph - hess_sph_over_v)) / g.B[i];
    }
    return out;
}

double weighted_sup(const Profile& f, double mu) {
    double sup = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        sup = std::max(sup, std::exp(mu * f.grid.node(i)) * std::abs(f[i]));
    return sup;
}

} // namespace staticflow
