#include "cmclab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cmclab/stencils.hpp"

namespace cmclab {

double surface_integral(const std::vector<double>& phi, const SurfaceFrame& frame) {
    const DiskGrid& grid = frame.grid;
    if (phi.size() != static_cast<std::size_t>(grid.interior_count()))
        throw std::invalid_argument("surface_integral: phi does not match grid");
    const double scale = grid.h_rho() * grid.h_theta();
    double total = 0.0;
    for (int i = 0; i < grid.n_rho(); ++i) {
        const double rho = grid.rho(i);
        for (int j = 0; j < grid.n_theta(); ++j) {
            const int id = grid.index(i, j);
            const double v = phi[id];
            if (!std::isfinite(v))
                throw std::invalid_argument("surface_integral: non-finite integrand");
            total += v * frame.w[id] * rho * scale;
        }
    }
    return total;
}

double boundary_integral(const std::vector<double>& psi, const DiskGrid& grid) {
    if (psi.size() != static_cast<std::size_t>(grid.n_theta()))
        throw std::invalid_argument("boundary_integral: psi does not match boundary ring");
    double total = 0.0;
    for (int j = 0; j < grid.n_theta(); ++j) {
        if (!std::isfinite(psi[j]))
            throw std::invalid_argument("boundary_integral: non-finite integrand");
        total += psi[j];
    }
    return total * grid.radius() * grid.h_theta();
}

BoundaryTrace boundary_trace(const SurfaceFrame& frame) {
    const DiskGrid& grid = frame.grid;
    if (!boundary_is_zero(frame.field))
        throw std::invalid_argument("boundary_trace: requires zero Dirichlet data");
    const int n = grid.n_rho();
    const int m = grid.n_theta();
    const double r = grid.radius();
    const double h = grid.h_rho();
    const auto wb = boundary_face_derivative_weights(h);

    // Quadratic extrapolation from the last three rings (offsets h/2,
    // 3h/2, 5h/2 inside the boundary) to rho = r.
    constexpr double e0 = 1.875, e1 = -1.25, e2 = 0.375;

    BoundaryTrace tr;
    tr.position.resize(m);
    tr.tangent.resize(m);
    tr.conormal.resize(m);
    tr.normal.resize(m);
    tr.nu_dot_a.resize(m);
    tr.sigma_nn.resize(m);
    tr.dNnu_dot_a.resize(m);

    const std::vector<double>& f = frame.field.values;

    for (int j = 0; j < m; ++j) {
        const double c = std::cos(grid.theta(j));
        const double s = std::sin(grid.theta(j));
        const int a = grid.index(n - 1, j);
        const int b = grid.index(n - 2, j);
        const int c3 = grid.index(n - 3, j);

        // Radial slope at the circle; g == 0 makes the angular slope vanish.
        const double f_rho = wb[0] * (0.0 - f[a]) + wb[2] * (f[b] - f[a]) +
                             wb[3] * (f[c3] - f[a]);
        const double fx = c * f_rho;
        const double fy = s * f_rho;
        const double w = std::sqrt(1.0 + fx * fx + fy * fy);

        const Vector3 normal = unit_normal(fx, fy);
        const Vector3 tangent{-s, c, 0.0};
        const Vector3 nu = normal.cross(tangent);

        const double hxx = e0 * frame.fxx[a] + e1 * frame.fxx[b] + e2 * frame.fxx[c3];
        const double hxy = e0 * frame.fxy[a] + e1 * frame.fxy[b] + e2 * frame.fxy[c3];
        const double hyy = e0 * frame.fyy[a] + e1 * frame.fyy[b] + e2 * frame.fyy[c3];

        // sigma(nu, nu) = p^T Hess f p / W with p the horizontal part of nu.
        const double px = nu.x, py = nu.y;
        const double sigma_nn =
            (px * px * hxx + 2.0 * px * py * hxy + py * py * hyy) / w;
        if (!std::isfinite(sigma_nn))
            throw std::runtime_error("boundary_trace: boundary layer unresolved, refine the grid");

        tr.position[j] = {r * c, r * s, 0.0};
        tr.tangent[j] = tangent;
        tr.normal[j] = normal;
        tr.conormal[j] = nu;
        tr.nu_dot_a[j] = nu.z;
        tr.sigma_nn[j] = sigma_nn;
        tr.dNnu_dot_a[j] = -sigma_nn * nu.z;
    }
    return tr;
}

double conormal_identity_residual(const BoundaryTrace& trace, const SurfaceFrame& frame) {
    const DiskGrid& grid = frame.grid;
    const double r = grid.radius();
    const int n = grid.n_rho();

    // The left side comes from the trace, whose normal rests on one-sided
    // differences of f. For an independent right side, extrapolate the
    // interior nodal normals to the circle instead.
    constexpr double e0 = 1.875, e1 = -1.25, e2 = 0.375;
    double worst = 0.0;
    for (int j = 0; j < grid.n_theta(); ++j) {
        const int a = grid.index(n - 1, j);
        const int b = grid.index(n - 2, j);
        const int c = grid.index(n - 3, j);
        const Vector3 extrap{e0 * frame.nx[a] + e1 * frame.nx[b] + e2 * frame.nx[c],
                             e0 * frame.ny[a] + e1 * frame.ny[b] + e2 * frame.ny[c],
                             e0 * frame.nz[a] + e1 * frame.nz[b] + e2 * frame.nz[c]};
        const Vector3 n_b = extrap.normalized();
        const double lhs = trace.nu_dot_a[j];
        const double rhs = n_b.dot(trace.position[j]) / r;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

} // namespace cmclab
