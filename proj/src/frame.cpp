#include "cmclab/frame.hpp"

#include <algorithm>
#include <cmath>

#include "cmclab/quadrature.hpp"
#include "cmclab/stencils.hpp"

namespace cmclab {

Derivatives gradient_hessian(const HeightField& field, const DiskGrid& grid) {
    require_matches(field, grid, "gradient_hessian");
    const PolarDerivatives d = polar_derivatives(field.values, field.boundary, grid);

    const int n = grid.n_rho();
    const int m = grid.n_theta();
    Derivatives out;
    out.fx.resize(field.values.size());
    out.fy.resize(field.values.size());
    out.fxx.resize(field.values.size());
    out.fxy.resize(field.values.size());
    out.fyy.resize(field.values.size());

    for (int i = 0; i < n; ++i) {
        const double rho = grid.rho(i);
        for (int j = 0; j < m; ++j) {
            const int id = grid.index(i, j);
            const double c = std::cos(grid.theta(j));
            const double s = std::sin(grid.theta(j));
            const double dr = d.d_rho[id];
            const double dt = d.d_theta[id];
            const double drr = d.d_rho2[id];
            const double dtt = d.d_theta2[id];
            const double drt = d.d_rho_theta[id];

            out.fx[id] = c * dr - s / rho * dt;
            out.fy[id] = s * dr + c / rho * dt;
            out.fxx[id] = c * c * drr - 2.0 * c * s / rho * drt +
                          s * s / (rho * rho) * dtt + s * s / rho * dr +
                          2.0 * c * s / (rho * rho) * dt;
            out.fyy[id] = s * s * drr + 2.0 * c * s / rho * drt +
                          c * c / (rho * rho) * dtt + c * c / rho * dr -
                          2.0 * c * s / (rho * rho) * dt;
            out.fxy[id] = c * s * drr + (c * c - s * s) / rho * drt -
                          c * s / (rho * rho) * dtt - c * s / rho * dr -
                          (c * c - s * s) / (rho * rho) * dt;
        }
    }
    return out;
}

Vector3 unit_normal(double fx, double fy) {
    const double w = std::sqrt(1.0 + fx * fx + fy * fy);
    return {-fx / w, -fy / w, 1.0 / w};
}

double mean_curvature(double fx, double fy, double fxx, double fxy, double fyy) {
    const double w2 = 1.0 + fx * fx + fy * fy;
    const double w = std::sqrt(w2);
    return ((1.0 + fy * fy) * fxx - 2.0 * fx * fy * fxy + (1.0 + fx * fx) * fyy) /
           (2.0 * w2 * w);
}

std::pair<double, double> gauss_and_sigma(double fx, double fy, double fxx,
                                          double fxy, double fyy, double h_mean) {
    const double w2 = 1.0 + fx * fx + fy * fy;
    const double k = (fxx * fyy - fxy * fxy) / (w2 * w2);
    return {k, 4.0 * h_mean * h_mean - 2.0 * k};
}

SurfaceFrame build_frame(const HeightField& field, const DiskGrid& grid) {
    Derivatives d = gradient_hessian(field, grid);

    SurfaceFrame fr(grid);
    fr.field = field;
    const std::size_t count = field.values.size();
    fr.w.resize(count);
    fr.nx.resize(count);
    fr.ny.resize(count);
    fr.nz.resize(count);
    fr.h_mean.resize(count);
    fr.k_gauss.resize(count);
    fr.sigma_sq.resize(count);
    fr.vertical.resize(count);

    for (std::size_t id = 0; id < count; ++id) {
        const double fx = d.fx[id], fy = d.fy[id];
        fr.w[id] = std::sqrt(1.0 + fx * fx + fy * fy);
        const Vector3 nrm = unit_normal(fx, fy);
        fr.nx[id] = nrm.x;
        fr.ny[id] = nrm.y;
        fr.nz[id] = nrm.z;
        fr.vertical[id] = nrm.z;
        fr.h_mean[id] = mean_curvature(fx, fy, d.fxx[id], d.fxy[id], d.fyy[id]);
        const auto [k, ss] =
            gauss_and_sigma(fx, fy, d.fxx[id], d.fxy[id], d.fyy[id], fr.h_mean[id]);
        fr.k_gauss[id] = k;
        fr.sigma_sq[id] = ss;
    }
    fr.fx = std::move(d.fx);
    fr.fy = std::move(d.fy);
    fr.fxx = std::move(d.fxx);
    fr.fxy = std::move(d.fxy);
    fr.fyy = std::move(d.fyy);
    return fr;
}

std::vector<double> laplace_beltrami(const std::vector<double>& u,
                                     const std::vector<double>& u_ring,
                                     const SurfaceFrame& frame) {
    const DiskGrid& grid = frame.grid;
    const int n = grid.n_rho();
    const int m = grid.n_theta();
    if (u.size() != static_cast<std::size_t>(grid.interior_count()) ||
        u_ring.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("laplace_beltrami: u does not match grid");
    for (double v : u)
        if (!std::isfinite(v))
            throw std::invalid_argument("laplace_beltrami: non-finite input");

    const double h = grid.h_rho();
    const double ht = grid.h_theta();
    const double face_den = 2.0 * std::sin(0.5 * ht);
    const auto wb = boundary_face_derivative_weights(h);

    const std::vector<double>& f = frame.field.values;
    const std::vector<double>& g = frame.field.boundary;

    const std::vector<double> f_rho = radial_derivative(f, g, grid);
    const std::vector<double> f_theta = angular_derivative(f, grid);
    const std::vector<double> u_rho = radial_derivative(u, u_ring, grid);
    const std::vector<double> u_theta = angular_derivative(u, grid);
    const std::vector<double> g_theta = ring_theta_derivative(g, grid);
    const std::vector<double> ur_theta = ring_theta_derivative(u_ring, grid);

    // Contravariant flux components of the induced metric
    //   sqrt(g) g^rr = (rho^2 + ft^2) / (rho W)
    //   sqrt(g) g^rt = -fr ft / (rho W)
    //   sqrt(g) g^tt = (1 + fr^2) / (rho W)
    // with W^2 = 1 + fr^2 + (ft/rho)^2.
    auto radial_face_flux = [&](double rho_f, double fr, double ft, double ur,
                                double ut) {
        const double wf = std::sqrt(1.0 + fr * fr + (ft / rho_f) * (ft / rho_f));
        return ((rho_f * rho_f + ft * ft) * ur - fr * ft * ut) / (rho_f * wf) * ht;
    };
    auto angular_face_flux = [&](double rho_f, double fr, double ft, double ur,
                                 double ut) {
        const double wf = std::sqrt(1.0 + fr * fr + (ft / rho_f) * (ft / rho_f));
        return (-fr * ft * ur + (1.0 + fr * fr) * ut) / (rho_f * wf) * h;
    };

    std::vector<double> net(u.size(), 0.0);

    // Radial faces between rings i and i+1, plus the face at rho = r.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            double flux;
            if (i + 1 < n) {
                const double rho_f = (i + 1) * h;
                const int a = grid.index(i, j);
                const int b = grid.index(i + 1, j);
                const double fr = (f[b] - f[a]) / h;
                const double ft = 0.5 * (f_theta[a] + f_theta[b]);
                const double ur = (u[b] - u[a]) / h;
                const double ut = 0.5 * (u_theta[a] + u_theta[b]);
                flux = radial_face_flux(rho_f, fr, ft, ur, ut);
            } else {
                const int a = grid.index(n - 1, j);
                const int b = grid.index(n - 2, j);
                const int c = grid.index(n - 3, j);
                const double fr = wb[0] * (g[j] - f[a]) + wb[2] * (f[b] - f[a]) +
                                  wb[3] * (f[c] - f[a]);
                const double ur = wb[0] * (u_ring[j] - u[a]) + wb[2] * (u[b] - u[a]) +
                                  wb[3] * (u[c] - u[a]);
                flux = radial_face_flux(grid.radius(), fr, g_theta[j], ur, ur_theta[j]);
            }
            net[grid.index(i, j)] += flux;
            if (i + 1 < n) net[grid.index(i + 1, j)] -= flux;
        }
    }

    // Angular faces between j and j+1.
    for (int i = 0; i < n; ++i) {
        const double rho_f = grid.rho(i);
        for (int j = 0; j < m; ++j) {
            const int a = grid.index(i, j);
            const int b = grid.index(i, j + 1);
            const double ft = (f[b] - f[a]) / face_den;
            const double fr = 0.5 * (f_rho[a] + f_rho[b]);
            const double ut = (u[b] - u[a]) / face_den;
            const double ur = 0.5 * (u_rho[a] + u_rho[b]);
            const double flux = angular_face_flux(rho_f, fr, ft, ur, ut);
            net[a] += flux;
            net[b] -= flux;
        }
    }

    std::vector<double> out(u.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const int id = grid.index(i, j);
            out[id] = net[id] / (grid.rho(i) * frame.w[id] * h * ht);
        }
    return out;
}

UmbilicityDeficit umbilicity_deficit(const SurfaceFrame& frame) {
    UmbilicityDeficit out;
    out.per_node.resize(frame.sigma_sq.size());
    for (std::size_t id = 0; id < frame.sigma_sq.size(); ++id) {
        const double d = frame.sigma_sq[id] - 2.0 * frame.h_mean[id] * frame.h_mean[id];
        out.per_node[id] = std::max(d, -1e-10);
    }
    std::vector<double> integrand(out.per_node.size());
    for (std::size_t id = 0; id < out.per_node.size(); ++id)
        integrand[id] = out.per_node[id] * frame.vertical[id];
    out.integrated = surface_integral(integrand, frame);
    return out;
}

} // namespace cmclab
