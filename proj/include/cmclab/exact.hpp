#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cmclab/grid.hpp"

namespace cmclab {

// A requested mean curvature falls outside the window in which a graph
// over the disk can exist (|H| <= 1/r, hemisphere at equality).
struct HOutOfRange : std::runtime_error {
    double h;
    double limit;
    HOutOfRange(double h_, double limit_, const std::string& what)
        : std::runtime_error(what), h(h_), limit(limit_) {}
};

enum class CapBranch { plane, small_cap, hemisphere };

// Closed-form comparison surface: the planar disk or the small spherical
// cap of sphere radius R over the boundary circle of radius r. Big caps
// are not graphs and are never catalogued.
struct CapSpec {
    double r = 1.0;
    double sphere_radius = 0.0;  // R; ignored for the plane branch
    CapBranch branch = CapBranch::plane;
};

// Maps a prescribed mean curvature to its cap. With the upward normal,
// caps over the plane have H = -1/R, so only H in [-1/r, 0] is admissible.
CapSpec cap_from_H(double r, double h_mean);

// Mean curvature of the catalogued surface under the upward normal.
inline double cap_mean_curvature(const CapSpec& spec) {
    return spec.branch == CapBranch::plane ? 0.0 : -1.0 / spec.sphere_radius;
}

// Samples f(rho) = sqrt(R^2 - rho^2) - sqrt(R^2 - r^2) on the grid
// (identically zero for the plane). Hemispheres are rejected: their
// gradient blows up at the boundary circle and no frame can be built.
HeightField cap_height_field(const CapSpec& spec, const DiskGrid& grid);

// Exact geometric quantities of the catalogued surface.
struct CapExactValues {
    double h_mean;              // H = -1/R (0 for the plane)
    double k_gauss;             // K = 1/R^2
    double sigma_sq;            // |sigma|^2 = 2/R^2
    double conormal_vertical;   // <nu, a> on the boundary = r/R
    double sigma_nn;            // sigma(nu,nu) = -1/R
    double area;                // 2 pi R (R - sqrt(R^2 - r^2)), or pi r^2
    double projected_integral;  // integral of <N,a> dS = pi r^2
    double flux;                // integral of <nu,a> ds = 2 pi r^2 / R
    double cap_height;          // height at the disk center

    double r = 1.0;
    double sphere_radius = 0.0;
    CapBranch branch = CapBranch::plane;

    // <N, a> as a function of the polar radius.
    double vertical(double rho) const {
        if (branch == CapBranch::plane) return 1.0;
        const double rr = sphere_radius;
        return std::sqrt(rr * rr - rho * rho) / rr;
    }

    double height(double rho) const {
        if (branch == CapBranch::plane) return 0.0;
        const double rr = sphere_radius;
        return std::sqrt(rr * rr - rho * rho) - std::sqrt(rr * rr - r * r);
    }
};

CapExactValues cap_exact_values(const CapSpec& spec);

} // namespace cmclab
