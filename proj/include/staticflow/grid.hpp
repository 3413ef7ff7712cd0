#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace staticflow {

/// Uniform 1-D grid in the radial coordinate. The domain is an annulus
/// away from the origin, so r_min must be strictly positive.
struct RadialGrid {
    double r_min = 0.0;
    double r_max = 0.0;
    std::size_t count = 0;

    RadialGrid() = default;
    RadialGrid(double rmin, double rmax, std::size_t n) : r_min(rmin), r_max(rmax), count(n) {
        if (!(r_min > 0.0)) throw std::invalid_argument("RadialGrid: r_min must be > 0");
        if (!(r_max > r_min)) throw std::invalid_argument("RadialGrid: r_max must exceed r_min");
        if (count < 5) throw std::invalid_argument("RadialGrid: need at least 5 nodes");
    }

    double spacing() const { return (r_max - r_min) / static_cast<double>(count - 1); }
    double node(std::size_t i) const { return r_min + static_cast<double>(i) * spacing(); }

    std::vector<double> nodes() const {
        std::vector<double> r(count);
        for (std::size_t i = 0; i < count; ++i) r[i] = node(i);
        return r;
    }

    friend bool operator==(const RadialGrid& a, const RadialGrid& b) {
        return a.r_min == b.r_min && a.r_max == b.r_max && a.count == b.count;
    }
};

/// One real sample per grid node.
struct Profile {
    RadialGrid grid;
    std::vector<double> values;

    Profile() = default;
    Profile(RadialGrid g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.count) throw std::invalid_argument("Profile: sample count does not match grid");
    }
    Profile(RadialGrid g, const std::function<double(double)>& f) : grid(g), values(g.count) {
        for (std::size_t i = 0; i < grid.count; ++i) values[i] = f(grid.node(i));
    }

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
    double& operator[](std::size_t i) { return values[i]; }

    bool all_finite() const;
    bool all_positive() const;
};

inline void require_same_grid(const Profile& a, const Profile& b, const char* what) {
    if (!(a.grid == b.grid)) throw std::invalid_argument(std::string(what) + ": profiles live on different grids");
}

namespace stencil {

// Second-order first/second derivatives on a uniform grid, one-sided at the
// two boundary nodes.
void d1(const std::vector<double>& f, double h, std::vector<double>& out);
void d2(const std::vector<double>& f, double h, std::vector<double>& out);

// Same stencils applied to log(f) for strictly positive samples. On profiles
// with exponential or power-law growth the log is nearly linear, which keeps
// the truncation constants flat instead of growing with the profile.
void log_d1(const std::vector<double>& f, double h, std::vector<double>& out);
void log_d2(const std::vector<double>& f, double h, std::vector<double>& out);

} // namespace stencil

Profile derivative(const Profile& f);
Profile second_derivative(const Profile& f);

} // namespace staticflow
