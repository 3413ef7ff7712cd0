#pragma once

#include "staticflow/metric.hpp"

#include <cstdint>

namespace staticflow {

enum class Scheme { rk4, euler };
enum class Termination { completed, budget_exceeded, positivity_lost, nonfinite };

const char* to_string(Termination t);
const char* to_string(Scheme s);

struct FlowControls {
    double t_end = 0.0;
    double cfl = 0.25;
    Scheme scheme = Scheme::rk4;
    std::size_t monitor_every = 100;
    double deviation_budget = 0.0; // <= 0 disables the budget monitor

    void validate() const {
        if (!(t_end > 0.0)) throw std::invalid_argument("FlowControls: t_end must be positive");
        if (!(cfl > 0.0) || cfl > 1.0) throw std::invalid_argument("FlowControls: cfl must lie in (0, 1]");
        if (monitor_every == 0) throw std::invalid_argument("FlowControls: monitor_every must be positive");
    }
};

/// Evolving data plus the frozen background that anchors the DeTurck gauge
/// and the deviation norms.
struct FlowState {
    RotSymMetric g;
    Profile V;
    double t = 0.0;
    StaticTriple background;
};

struct FlowReport {
    std::vector<double> times;
    std::vector<double> weighted_dev;    // sup e^{2r} (|g - g0|_{g0} + |grad_{g0} g|_{g0})
    std::vector<double> min_lapse;
    std::vector<double> as_defect;       // d2 of as_defect at a = 2
    std::vector<double> residual_norms;  // static residual certificate sup
    Termination terminated = Termination::completed;
    double dt = 0.0;
    std::uint64_t steps = 0;

    double max_weighted_dev() const {
        double m = 0.0;
        for (double v : weighted_dev) m = std::max(m, v);
        return m;
    }
};

struct FlowDerivative {
    Profile dA, dB, dV;
};

/// Time derivatives of the gauged flow: dg = -2 Ric(g) - 2n g + 2 V^{-1}
/// Hess V + L_W g with W = deturck_field(g, background), and dV = Lap V - n V
/// + W(V).
FlowDerivative rhs(const FlowState& s);

/// Largest explicit step the parabolic stability contract allows at cfl = 1:
/// h^2 min(A) / 2.
double max_stable_dt(const StaticTriple& t);

/// One explicit step; boundary nodes stay pinned to the background. dt must
/// satisfy dt <= max_stable_dt.
FlowState step(const FlowState& s, double dt, Scheme scheme);

/// Integrates to t_end or to early termination, recording monitors every
/// monitor_every steps. A report is always returned.
FlowReport evolve(const StaticTriple& initial, const FlowControls& controls);

/// Max weighted deviation over an evolve run to the given horizon.
double stationarity_drift(const StaticTriple& initial, double horizon, FlowControls controls);

} // namespace staticflow
