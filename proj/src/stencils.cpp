#include "cmclab/stencils.hpp"

namespace cmclab {

std::vector<double> ring_theta_derivative(const std::vector<double>& ring,
                                          const DiskGrid& grid) {
    const int m = grid.n_theta();
    const double den = 2.0 * std::sin(grid.h_theta());
    std::vector<double> out(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
        out[j] = (ring[grid.wrap(j + 1)] - ring[grid.wrap(j - 1)]) / den;
    return out;
}

std::vector<double> angular_derivative(const std::vector<double>& values,
                                       const DiskGrid& grid) {
    const int n = grid.n_rho();
    const int m = grid.n_theta();
    const double den = 2.0 * std::sin(grid.h_theta());
    std::vector<double> out(values.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            out[grid.index(i, j)] =
                (values[grid.index(i, j + 1)] - values[grid.index(i, j - 1)]) / den;
    return out;
}

std::vector<double> radial_derivative(const std::vector<double>& values,
                                      const std::vector<double>& ring,
                                      const DiskGrid& grid) {
    const int n = grid.n_rho();
    const int m = grid.n_theta();
    const double h = grid.h_rho();
    const auto w1 = onesided_first_derivative_weights(h);
    std::vector<double> out(values.size());
    for (int j = 0; j < m; ++j) {
        out[grid.index(0, j)] =
            (values[grid.index(1, j)] - values[grid.index(0, grid.opposite(j))]) /
            (2.0 * h);
        for (int i = 1; i + 1 < n; ++i)
            out[grid.index(i, j)] =
                (values[grid.index(i + 1, j)] - values[grid.index(i - 1, j)]) /
                (2.0 * h);
        // difference form so constants cancel exactly
        const double base = values[grid.index(n - 1, j)];
        out[grid.index(n - 1, j)] =
            w1[0] * (values[grid.index(n - 2, j)] - base) + w1[2] * (ring[j] - base);
    }
    return out;
}

PolarDerivatives polar_derivatives(const std::vector<double>& values,
                                   const std::vector<double>& ring,
                                   const DiskGrid& grid) {
    const int n = grid.n_rho();
    const int m = grid.n_theta();
    const double h = grid.h_rho();
    const double h2 = h * h;
    const double den1 = 2.0 * std::sin(grid.h_theta());
    const double den2 = 4.0 * std::sin(0.5 * grid.h_theta()) * std::sin(0.5 * grid.h_theta());
    const auto w2 = onesided_second_derivative_weights(h);

    PolarDerivatives d;
    d.d_rho = radial_derivative(values, ring, grid);
    d.d_theta.resize(values.size());
    d.d_rho2.resize(values.size());
    d.d_theta2.resize(values.size());
    d.d_rho_theta.resize(values.size());

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            const double up = values[grid.index(i, j + 1)];
            const double um = values[grid.index(i, j - 1)];
            const double u0 = values[grid.index(i, j)];
            d.d_theta[grid.index(i, j)] = (up - um) / den1;
            d.d_theta2[grid.index(i, j)] = ((up - u0) + (um - u0)) / den2;
        }
    }

    for (int j = 0; j < m; ++j) {
        {
            const double u0 = values[grid.index(0, j)];
            d.d_rho2[grid.index(0, j)] =
                ((values[grid.index(1, j)] - u0) +
                 (values[grid.index(0, grid.opposite(j))] - u0)) / h2;
        }
        for (int i = 1; i + 1 < n; ++i) {
            const double u0 = values[grid.index(i, j)];
            d.d_rho2[grid.index(i, j)] =
                ((values[grid.index(i + 1, j)] - u0) +
                 (values[grid.index(i - 1, j)] - u0)) / h2;
        }
        {
            const double base = values[grid.index(n - 1, j)];
            d.d_rho2[grid.index(n - 1, j)] =
                w2[0] * (values[grid.index(n - 3, j)] - base) +
                w2[1] * (values[grid.index(n - 2, j)] - base) +
                w2[3] * (ring[j] - base);
        }
    }

    // Mixed derivative: angular stencil applied to the radial derivative.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            d.d_rho_theta[grid.index(i, j)] =
                (d.d_rho[grid.index(i, j + 1)] - d.d_rho[grid.index(i, j - 1)]) / den1;

    return d;
}

} // namespace cmclab
