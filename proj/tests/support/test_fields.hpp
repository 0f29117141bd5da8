#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "cmclab/grid.hpp"

namespace cmclab::testing {

// Samples an analytic height z = fn(x, y) on the grid, boundary included.
inline HeightField sample_field(const DiskGrid& grid,
                                const std::function<double(double, double)>& fn) {
    HeightField f = HeightField::zero(grid);
    for (int i = 0; i < grid.n_rho(); ++i) {
        const double rho = grid.rho(i);
        for (int j = 0; j < grid.n_theta(); ++j) {
            const double t = grid.theta(j);
            f.values[grid.index(i, j)] = fn(rho * std::cos(t), rho * std::sin(t));
        }
    }
    for (int j = 0; j < grid.n_theta(); ++j) {
        const double t = grid.theta(j);
        f.boundary[j] = fn(grid.radius() * std::cos(t), grid.radius() * std::sin(t));
    }
    return f;
}

// Smooth random field vanishing on the boundary circle: a harmonic
// polynomial combination damped by (1 - (rho/r)^2), scaled to the given
// amplitude. Smooth through the origin by construction.
inline HeightField random_smooth_field(const DiskGrid& grid, double amplitude,
                                       unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const double r = grid.radius();
    struct Term {
        int k;
        double a, b, c;
    };
    std::vector<Term> terms;
    for (int k = 0; k <= 3; ++k)
        terms.push_back({k, coeff(gen), coeff(gen), coeff(gen)});

    HeightField f = HeightField::zero(grid);
    double peak = 0.0;
    auto eval = [&](double x, double y) {
        const double rho2 = (x * x + y * y) / (r * r);
        double acc = 0.0;
        // Re z^k and Im z^k with an extra radial modulation rho^2.
        double re = 1.0, im = 0.0;
        for (const Term& t : terms) {
            acc += (t.a * re + t.b * im) * (1.0 + t.c * rho2) / std::pow(r, t.k);
            const double re_next = re * x - im * y;
            im = re * y + im * x;
            re = re_next;
        }
        return (1.0 - rho2) * acc;
    };
    for (int i = 0; i < grid.n_rho(); ++i) {
        const double rho = grid.rho(i);
        for (int j = 0; j < grid.n_theta(); ++j) {
            const double t = grid.theta(j);
            const double v = eval(rho * std::cos(t), rho * std::sin(t));
            f.values[grid.index(i, j)] = v;
            peak = std::max(peak, std::abs(v));
        }
    }
    if (peak > 0.0)
        for (double& v : f.values) v *= amplitude / peak;
    return f;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

} // namespace cmclab::testing
