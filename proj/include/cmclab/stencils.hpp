#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "cmclab/grid.hpp"

namespace cmclab {

// Nodal polar derivatives of a ring-augmented scalar.
//
// Radial direction: second-order central differences. At the innermost
// ring the stencil continues through the origin to the antipodal node,
// which keeps the spacing uniform; at the outermost ring one-sided
// stencils close the gap to the Dirichlet ring (the ring sits half a
// cell away, so the weights are nonuniform).
//
// Angular direction: central differences with trigonometric denominators
// 2*sin(h) and 4*sin(h/2)^2 instead of 2*h and h^2. These agree with the
// plain denominators to O(h^2) on smooth data and differentiate degree-1
// harmonics exactly, so fields that are linear in (x, y) come out exact.
struct PolarDerivatives {
    std::vector<double> d_rho;
    std::vector<double> d_theta;
    std::vector<double> d_rho2;
    std::vector<double> d_theta2;
    std::vector<double> d_rho_theta;
};

// One-sided first derivative at rho = r from (ring, f[n-1], f[n-2]).
// Exact for quadratics.
inline std::array<double, 3> boundary_first_derivative_weights(double h) {
    return {8.0 / (3.0 * h), -3.0 / h, 1.0 / (3.0 * h)};
}

// One-sided second derivative at the outermost node, from
// (f[n-3], f[n-2], f[n-1], ring). Exact for cubics.
inline std::array<double, 4> onesided_second_derivative_weights(double h) {
    const double h2 = h * h;
    return {-0.2 / h2, 2.0 / h2, -5.0 / h2, 3.2 / h2};
}

// First derivative at rho = r from (ring, f[n-1], f[n-2], f[n-3]) whose
// leading h^2 error coefficient matches the interior two-point face
// stencil (+f'''/24). Keeping that coefficient continuous across the
// last face is what preserves second-order residuals at boundary cells.
inline std::array<double, 4> boundary_face_derivative_weights(double h) {
    return {3.2 / h, -4.0 / h, 1.0 / h, -0.2 / h};
}

// First derivative at the outermost node rho = r - h/2 from
// (f[n-2], f[n-1], ring). Exact for quadratics.
inline std::array<double, 3> onesided_first_derivative_weights(double h) {
    return {-1.0 / (3.0 * h), -1.0 / h, 4.0 / (3.0 * h)};
}

// Angular derivative of the Dirichlet ring itself.
std::vector<double> ring_theta_derivative(const std::vector<double>& ring,
                                          const DiskGrid& grid);

PolarDerivatives polar_derivatives(const std::vector<double>& values,
                                   const std::vector<double>& ring,
                                   const DiskGrid& grid);

// d_rho only (used for face averages in divergence-form operators).
std::vector<double> radial_derivative(const std::vector<double>& values,
                                      const std::vector<double>& ring,
                                      const DiskGrid& grid);

// d_theta only.
std::vector<double> angular_derivative(const std::vector<double>& values,
                                       const DiskGrid& grid);

} // namespace cmclab
