#pragma once

#include <vector>

#include "cmclab/frame.hpp"
#include "cmclab/grid.hpp"
#include "cmclab/vec3.hpp"

namespace cmclab {

// Integral of phi over the graph surface: sum of phi * W * rho * h_rho *
// h_theta (midpoint rule in rho, trapezoid in theta). The summation order
// is fixed i-major so repeated runs are bitwise identical.
double surface_integral(const std::vector<double>& phi, const SurfaceFrame& frame);

// Integral of psi over the boundary circle, ds = r * h_theta. Exact for
// trigonometric polynomials of degree below n_theta.
double boundary_integral(const std::vector<double>& psi, const DiskGrid& grid);

// Per-boundary-node conormal data along the circle rho = r. Requires
// homogeneous Dirichlet data (the boundary curve lies in the plane z = 0).
struct BoundaryTrace {
    std::vector<Vector3> position;   // alpha(theta_j) = (r cos, r sin, 0)
    std::vector<Vector3> tangent;    // alpha', counterclockwise unit tangent
    std::vector<Vector3> conormal;   // nu = N x alpha', inward, unit
    std::vector<Vector3> normal;     // surface normal extended to rho = r
    std::vector<double> nu_dot_a;    // <nu, a>
    std::vector<double> sigma_nn;    // sigma(nu, nu)
    std::vector<double> dNnu_dot_a;  // <dN nu, a> = -sigma(nu,nu) <nu,a>
};

// Builds the trace from one-sided gradient data at rho = r and quadratic
// extrapolation of the interior Hessian to the boundary.
BoundaryTrace boundary_trace(const SurfaceFrame& frame);

// Max over boundary nodes of |<nu,a> - (1/r) <N, alpha>|.
double conormal_identity_residual(const BoundaryTrace& trace, const SurfaceFrame& frame);

} // namespace cmclab
