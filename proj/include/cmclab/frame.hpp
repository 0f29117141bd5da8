#pragma once

#include <utility>
#include <vector>

#include "cmclab/grid.hpp"
#include "cmclab/vec3.hpp"

namespace cmclab {

// Cartesian first and second derivatives of a height field at every
// interior node, obtained from the polar stencils by the chain rule.
struct Derivatives {
    std::vector<double> fx, fy;
    std::vector<double> fxx, fxy, fyy;
};

Derivatives gradient_hessian(const HeightField& field, const DiskGrid& grid);

// Upward unit normal (-fx, -fy, 1) / W with W = sqrt(1 + fx^2 + fy^2).
Vector3 unit_normal(double fx, double fy);

// H = ((1+fy^2) fxx - 2 fx fy fxy + (1+fx^2) fyy) / (2 W^3).
double mean_curvature(double fx, double fy, double fxx, double fxy, double fyy);

// K = (fxx fyy - fxy^2) / W^4 and |sigma|^2 = 4 H^2 - 2 K.
std::pair<double, double> gauss_and_sigma(double fx, double fy, double fxx,
                                          double fxy, double fyy, double h_mean);

// Pointwise geometry of the graph of a height field: gradient, Hessian,
// tilt factor W, unit normal, mean and Gauss curvature, squared second
// fundamental form, and the vertical component of the normal. Keeps a
// copy of the source field and grid so downstream operators (surface
// quadrature, Laplace-Beltrami, boundary traces) need no extra inputs.
struct SurfaceFrame {
    DiskGrid grid;
    HeightField field;
    std::vector<double> fx, fy;
    std::vector<double> fxx, fxy, fyy;
    std::vector<double> w;         // sqrt(1 + |grad f|^2), >= 1
    std::vector<double> nx, ny, nz;
    std::vector<double> h_mean;    // H
    std::vector<double> k_gauss;   // K
    std::vector<double> sigma_sq;  // |sigma|^2 = 4H^2 - 2K
    std::vector<double> vertical;  // <N, a> = 1/W

    explicit SurfaceFrame(DiskGrid g) : grid(std::move(g)) {}
};

SurfaceFrame build_frame(const HeightField& field, const DiskGrid& grid);

// Laplace-Beltrami operator of the metric induced on the graph, assembled
// in finite-volume form: cell integrals of div(sqrt(g) g^{ij} d_j u) divided
// by the cell's surface area. The discrete divergence theorem holds up to
// rounding because interior face fluxes cancel in pairs.
//
// u holds interior values, u_ring its Dirichlet ring at rho = r.
std::vector<double> laplace_beltrami(const std::vector<double>& u,
                                     const std::vector<double>& u_ring,
                                     const SurfaceFrame& frame);

struct UmbilicityDeficit {
    std::vector<double> per_node;  // |sigma|^2 - 2 H^2, clamped at -1e-10
    double integrated = 0.0;       // surface integral of deficit * <N,a>
};

UmbilicityDeficit umbilicity_deficit(const SurfaceFrame& frame);

} // namespace cmclab
