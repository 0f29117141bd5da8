#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmclab {

// Staggered polar grid on the disk of a given radius.
//
// Interior nodes sit at half-integer radii rho_i = (i + 1/2) * h_rho,
// i in [0, n_rho), and angles theta_j = j * h_theta, j in [0, n_theta).
// The origin is never a node; stencils that would cross it couple node
// (0, j) with its antipodal partner (0, j + n_theta/2), which is why
// n_theta must be even. A separate ring of Dirichlet values lives at
// rho = radius exactly.
class DiskGrid {
public:
    DiskGrid(double radius, int n_rho, int n_theta)
        : radius_(radius), n_rho_(n_rho), n_theta_(n_theta) {
        if (!(radius > 0.0) || !std::isfinite(radius))
            throw std::invalid_argument("DiskGrid: radius must be positive and finite");
        if (n_rho < 4)
            throw std::invalid_argument("DiskGrid: n_rho must be at least 4");
        if (n_theta < 8 || n_theta % 2 != 0)
            throw std::invalid_argument("DiskGrid: n_theta must be even and at least 8");
        h_rho_ = radius_ / n_rho_;
        h_theta_ = 2.0 * std::numbers::pi / n_theta_;
    }

    double radius() const { return radius_; }
    int n_rho() const { return n_rho_; }
    int n_theta() const { return n_theta_; }
    double h_rho() const { return h_rho_; }
    double h_theta() const { return h_theta_; }

    double rho(int i) const { return (i + 0.5) * h_rho_; }
    double theta(int j) const { return wrap(j) * h_theta_; }

    int wrap(int j) const {
        int m = j % n_theta_;
        return m < 0 ? m + n_theta_ : m;
    }

    // Angular index of the node reached by passing straight through the origin.
    int opposite(int j) const { return wrap(j + n_theta_ / 2); }

    int index(int i, int j) const { return i * n_theta_ + wrap(j); }

    int interior_count() const { return n_rho_ * n_theta_; }

    // Flat area of the polar cell centered on ring i (exact, since the
    // midpoint rule integrates rho drho exactly).
    double cell_area(int i) const { return rho(i) * h_rho_ * h_theta_; }

    double disk_area() const { return std::numbers::pi * radius_ * radius_; }

    bool same_layout(const DiskGrid& o) const {
        return radius_ == o.radius_ && n_rho_ == o.n_rho_ && n_theta_ == o.n_theta_;
    }

private:
    double radius_;
    int n_rho_;
    int n_theta_;
    double h_rho_;
    double h_theta_;
};

// Scalar samples over a DiskGrid: one value per interior node plus the
// Dirichlet ring at rho = radius. Represents the graph z = f(x, y).
struct HeightField {
    std::vector<double> values;    // interior nodes, i-major order
    std::vector<double> boundary;  // ring values g(j), size n_theta

    static HeightField zero(const DiskGrid& grid) {
        HeightField f;
        f.values.assign(static_cast<std::size_t>(grid.interior_count()), 0.0);
        f.boundary.assign(static_cast<std::size_t>(grid.n_theta()), 0.0);
        return f;
    }

    bool matches(const DiskGrid& grid) const {
        return values.size() == static_cast<std::size_t>(grid.interior_count()) &&
               boundary.size() == static_cast<std::size_t>(grid.n_theta());
    }
};

inline void require_matches(const HeightField& f, const DiskGrid& grid,
                            const char* who) {
    if (!f.matches(grid))
        throw std::invalid_argument(std::string(who) +
                                    ": field dimensions do not match grid");
    for (double v : f.values)
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(who) + ": non-finite field value");
    for (double v : f.boundary)
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(who) + ": non-finite boundary value");
}

inline bool boundary_is_zero(const HeightField& f) {
    for (double v : f.boundary)
        if (v != 0.0) return false;
    return true;
}

} // namespace cmclab
