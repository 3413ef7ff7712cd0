#include "staticflow/grid.hpp"

#include <cmath>

namespace staticflow {

bool Profile::all_finite() const {
    for (double v : values)
        if (!std::isfinite(v)) return false;
    return true;
}

bool Profile::all_positive() const {
    for (double v : values)
        if (!(v > 0.0)) return false;
    return true;
}

namespace stencil {

void d1(const std::vector<double>& f, double h, std::vector<double>& out) {
    const std::size_t n = f.size();
    out.resize(n);
    const double inv2h = 1.0 / (2.0 * h);
    out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2h;
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) * inv2h;
    out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv2h;
}

void d2(const std::vector<double>& f, double h, std::vector<double>& out) {
    const std::size_t n = f.size();
    out.resize(n);
    const double invh2 = 1.0 / (h * h);
    out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * invh2;
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * invh2;
    out[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * invh2;
}

namespace {
thread_local std::vector<double> log_buf;

// Log samples normalized by a mid-grid reference. The constant shift leaves
// every derivative unchanged but keeps the samples near zero, and an overall
// rescaling of f by a power of two cancels exactly in the division.
void fill_log(const std::vector<double>& f) {
    log_buf.resize(f.size());
    const double ref = f[f.size() / 2];
    for (std::size_t i = 0; i < f.size(); ++i) log_buf[i] = std::log(f[i] / ref);
}
} // namespace

void log_d1(const std::vector<double>& f, double h, std::vector<double>& out) {
    fill_log(f);
    d1(log_buf, h, out);
}

void log_d2(const std::vector<double>& f, double h, std::vector<double>& out) {
    fill_log(f);
    d2(log_buf, h, out);
}

} // namespace stencil

Profile derivative(const Profile& f) {
    Profile out = f;
    stencil::d1(f.values, f.grid.spacing(), out.values);
    return out;
}

Profile second_derivative(const Profile& f) {
    Profile out = f;
    stencil::d2(f.values, f.grid.spacing(), out.values);
    return out;
}

} // namespace staticflow
