#pragma once

#include "staticflow/metric.hpp"

namespace staticflow {

/// Finite-difference Ricci components of g = A dr^2 + B sigma. Second order,
/// one-sided at the two boundary nodes. Derivatives of the positive metric
/// coefficients are taken logarithmically.
CurvatureComponents ricci(const RotSymMetric& g);

struct HessianComponents {
    Profile rr;
    Profile sph;
};

/// Hessian of a radial function f: (f'' - (A'/2A) f') dr^2 + (B'/2A) f' sigma.
HessianComponents hessian_radial(const RotSymMetric& g, const Profile& f);

/// Laplace-Beltrami of a radial function, the g-trace of hessian_radial.
Profile laplacian_radial(const RotSymMetric& g, const Profile& f);

struct StaticResidual {
    Profile tensor_rr;  // (Ric + n g - V^{-1} Hess V)_rr
    Profile tensor_sph; // fiber coefficient of the same tensor
    Profile scalar;     // Lap V - n V
};

/// Residuals of the static vacuum equations; all vanish to truncation error
/// exactly on discrete static Einstein vacua.
StaticResidual static_residual(const StaticTriple& t);

struct ResidualNorms {
    double tensor_sup = 0.0; // sup_g-frame norm of the tensor residual
    double scalar_sup = 0.0; // sup |Lap V - n V| / V
    double sup() const { return tensor_sup > scalar_sup ? tensor_sup : scalar_sup; }
};

ResidualNorms residual_norms(const StaticTriple& t, const StaticResidual& res);
ResidualNorms residual_norms(const StaticTriple& t);

/// Pointwise frame norm of a symmetric 2-tensor T = t_rr dr^2 + t_sph sigma.
Profile tensor_norm(const RotSymMetric& g, const Profile& t_rr, const Profile& t_sph);

/// Pointwise max over the two plane types of |K + 1|, the deviation of
/// sectional curvature from the hyperbolic value.
Profile sectional_defect(const RotSymMetric& g);

struct AsDefect {
    double d2 = 0.0; // sup e^{2r} |Ric + n g - V^{-1} Hess V|_g
    double da = 0.0; // sup e^{ar} |grad (V^{-1} Lap V)|_g
};

AsDefect as_defect(const StaticTriple& t, double a);

/// Radial component of the DeTurck vector field W^k = g^{ij}(Gamma - hat
/// Gamma)^k_ij. Identically zero (exact cancellation) when g == g_hat.
Profile deturck_field(const RotSymMetric& g, const RotSymMetric& g_hat);

struct LieComponents {
    Profile rr;
    Profile sph;
};

/// Lie derivative of g along W = w d/dr (w carries the raised index):
/// (L_W g)_rr = w A' + 2 A w', fiber coefficient w B'.
LieComponents lie_derivative_radial(const RotSymMetric& g, const Profile& w);

struct LiftBlockResidual {
    Profile theta; // |Ric(h)_tt / V^2 + V^{-1} Lap V|
    Profile rr;    // |Ric(h)_rr - (Ric(g) - V^{-1} Hess V)_rr| / A
    Profile sph;   // fiber coefficient mismatch / B
};

/// Checks the block structure of Ric(h) for the circle lift h = V^2 dtheta^2
/// + g. The h-side is computed by an independent coordinate-chart
/// finite-difference oracle, the g-side by the operators above; both are
/// second order, so the residuals are O(h^2) for any smooth triple.
LiftBlockResidual lift_block_check(const StaticTriple& t);

/// sup over nodes of e^{mu r} |f(r)|.
double weighted_sup(const Profile& f, double mu);

} // namespace staticflow
