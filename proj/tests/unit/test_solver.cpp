#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cmclab/exact.hpp"
#include "cmclab/frame.hpp"
#include "cmclab/solver.hpp"
#include "support/test_fields.hpp"

using namespace cmclab;
using cmclab::testing::random_smooth_field;

namespace {
constexpr double kPi = std::numbers::pi;

double linf(const std::vector<double>& v) {
    double worst = 0.0;
    for (double x : v) worst = std::max(worst, std::abs(x));
    return worst;
}
} // namespace

TEST_CASE("flat field residuals") {
    DiskGrid grid(1.0, 16, 32);
    const HeightField flat = HeightField::zero(grid);

    for (double v : cmc_residual(flat, 0.0, grid)) CHECK(v == 0.0);
    // with H = -1/2 the divergence term vanishes and the residual is -2H
    for (double v : cmc_residual(flat, -0.5, grid)) CHECK(v == 1.0);
}

TEST_CASE("exact cap residual converges at second order in L2") {
    auto res_norm = [](const DiskGrid& grid) {
        const CapSpec spec = cap_from_H(grid.radius(), -0.5);
        const HeightField f = cap_height_field(spec, grid);
        return residual_norm(cmc_residual(f, -0.5, grid), grid);
    };
    const double e1 = res_norm(DiskGrid(1.0, 32, 64));
    const double e2 = res_norm(DiskGrid(1.0, 64, 128));
    const double e3 = res_norm(DiskGrid(1.0, 128, 256));
    CHECK(std::log2(e1 / e2) > 1.7);
    CHECK(std::log2(e2 / e3) > 1.7);
}

TEST_CASE("discrete compatibility: cell sums equal the boundary flux") {
    DiskGrid grid(1.0, 16, 32);
    const HeightField f = random_smooth_field(grid, 0.4, 17u);
    const double h_mean = -0.3;
    const std::vector<double> res = cmc_residual(f, h_mean, grid);
    double lhs = 0.0;
    for (int i = 0; i < grid.n_rho(); ++i)
        for (int j = 0; j < grid.n_theta(); ++j)
            lhs += res[grid.index(i, j)] * grid.cell_area(i);
    lhs += 2.0 * h_mean * grid.disk_area();
    const double rhs = boundary_flux(f, grid);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("jacobian at the flat state is the polar Laplacian") {
    DiskGrid grid(1.0, 24, 48);
    const HeightField flat = HeightField::zero(grid);
    // u = r^2 - rho^2 vanishes on the ring and has flat Laplacian -4
    std::vector<double> u(grid.interior_count());
    for (int i = 0; i < grid.n_rho(); ++i)
        for (int j = 0; j < grid.n_theta(); ++j)
            u[grid.index(i, j)] = 1.0 - grid.rho(i) * grid.rho(i);
    const std::vector<double> ju = jacobian_apply(flat, u, 0.0, grid);
    for (double v : ju) CHECK(v == doctest::Approx(-4.0).epsilon(1e-10));

    // and it agrees with the flat-metric Laplace-Beltrami operator
    const SurfaceFrame fr = build_frame(flat, grid);
    const HeightField smooth = random_smooth_field(grid, 1.0, 4u);
    const std::vector<double> zero_ring(grid.n_theta(), 0.0);
    const std::vector<double> lb = laplace_beltrami(smooth.values, zero_ring, fr);
    const std::vector<double> ju2 = jacobian_apply(flat, smooth.values, 0.0, grid);
    for (std::size_t id = 0; id < lb.size(); ++id)
        CHECK(ju2[id] == doctest::Approx(lb[id]).epsilon(1e-10));
}

TEST_CASE("jacobian matches central finite differences on random fields") {
    DiskGrid grid(1.0, 16, 32);
    const double eps = 1e-6;
    for (unsigned seed = 0; seed < 10; ++seed) {
        const HeightField f = random_smooth_field(grid, 0.1, 100u + seed);
        const HeightField dir = random_smooth_field(grid, 1.0, 200u + seed);

        const std::vector<double> analytic = jacobian_apply(f, dir.values, -0.5, grid);

        HeightField plus = f, minus = f;
        for (std::size_t id = 0; id < f.values.size(); ++id) {
            plus.values[id] += eps * dir.values[id];
            minus.values[id] -= eps * dir.values[id];
        }
        const std::vector<double> rp = cmc_residual(plus, -0.5, grid);
        const std::vector<double> rm = cmc_residual(minus, -0.5, grid);

        double num = 0.0, den = 0.0;
        for (std::size_t id = 0; id < analytic.size(); ++id) {
            const double fd = (rp[id] - rm[id]) / (2.0 * eps);
            num += (analytic[id] - fd) * (analytic[id] - fd);
            den += analytic[id] * analytic[id];
        }
        CHECK(std::sqrt(num / den) <= 1e-6);
    }
}

TEST_CASE("jacobian of the zero direction vanishes") {
    DiskGrid grid(1.0, 8, 16);
    const HeightField f = random_smooth_field(grid, 0.2, 5u);
    const std::vector<double> zero(grid.interior_count(), 0.0);
    for (double v : jacobian_apply(f, zero, -0.25, grid)) CHECK(v == 0.0);
}

TEST_CASE("solve H = 0 returns the flat solution immediately") {
    DiskGrid grid(1.0, 16, 32);
    const SolveResult result = solve_dirichlet(1.0, 0.0, SolverConfig{}, grid);
    CHECK(result.converged);
    CHECK(result.total_newton_iters == 0);
    CHECK(linf(result.field.values) == 0.0);
    CHECK(result.final_residual <= 1e-10);
}

TEST_CASE("solve H = -1/2 matches the exact cap") {
    const SolverConfig config;
    const DiskGrid coarse(1.0, 64, 128);
    const DiskGrid fine(1.0, 128, 256);
    const SolveResult rc = solve_dirichlet(1.0, -0.5, config, coarse);
    const SolveResult rf = solve_dirichlet(1.0, -0.5, config, fine);
    CHECK(rc.converged);
    CHECK(rf.converged);
    CHECK(rc.total_newton_iters <= 50);
    CHECK(rf.total_newton_iters <= 50);
    CHECK(rf.final_residual <= 1e-10);

    const CapSpec spec = cap_from_H(1.0, -0.5);
    const ErrorNorms ec = error_vs_exact(rc, spec, coarse);
    const ErrorNorms ef = error_vs_exact(rf, spec, fine);
    CHECK(ef.linf <= 5e-4);
    const double ratio = ec.linf / ef.linf;
    CHECK(ratio >= 3.0);
    CHECK(ratio <= 5.0);

    // center height approaches 2 - sqrt(3)
    const double center = rf.field.values[fine.index(0, 0)];
    CHECK(center == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-3));

    // rotational symmetry of the data forces a symmetric solution
    double asym = 0.0;
    for (int i = 0; i < fine.n_rho(); ++i) {
        double lo = rf.field.values[fine.index(i, 0)], hi = lo;
        for (int j = 1; j < fine.n_theta(); ++j) {
            const double v = rf.field.values[fine.index(i, j)];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        asym = std::max(asym, hi - lo);
    }
    CHECK(asym <= 1e-8);

    // one-sidedness: the interior lies strictly above the plane
    double lowest = rf.field.values[0];
    for (double v : rf.field.values) lowest = std::min(lowest, v);
    CHECK(lowest > 0.0);
}

TEST_CASE("solve rejects out-of-window H") {
    DiskGrid grid(1.0, 16, 32);
    CHECK_THROWS_AS(solve_dirichlet(1.0, -1.05, SolverConfig{}, grid), HOutOfRange);
    CHECK_THROWS_AS(solve_dirichlet(1.0, -0.96, SolverConfig{}, grid), HOutOfRange);
    CHECK_THROWS_AS(solve_dirichlet(1.0, 1.05, SolverConfig{}, grid), HOutOfRange);
}

TEST_CASE("positive H solves the mirrored cap") {
    DiskGrid grid(1.0, 32, 64);
    const SolveResult result = solve_dirichlet(1.0, 0.5, SolverConfig{}, grid);
    CHECK(result.converged);
    double highest = result.field.values[0];
    for (double v : result.field.values) highest = std::max(highest, v);
    CHECK(highest < 0.0);  // below the plane, one-signed
}

TEST_CASE("error_vs_exact distinguishes caps") {
    const DiskGrid grid(1.0, 64, 128);
    const SolveResult result = solve_dirichlet(1.0, -0.5, SolverConfig{}, grid);

    CHECK(error_vs_exact(result, cap_from_H(1.0, -0.5), grid).linf < 1e-3);

    // against the wrong sphere radius the gap is the closed-form
    // (2 - sqrt(3)) - (3 - sqrt(8)) ~ 0.0964 at the center
    const CapSpec wrong{1.0, 3.0, CapBranch::small_cap};
    const double gap = error_vs_exact(result, wrong, grid).linf;
    CHECK(gap > 0.09);
    CHECK(gap < 0.11);

    const DiskGrid other(2.0, 16, 32);
    CHECK_THROWS_AS(error_vs_exact(result, CapSpec{2.0, 0.0, CapBranch::plane}, other),
                    std::invalid_argument);
}

TEST_CASE("shallow cap solve") {
    const DiskGrid grid(1.0, 64, 128);
    const SolveResult result = solve_dirichlet(1.0, -0.05, SolverConfig{}, grid);
    CHECK(result.converged);
    double lowest = result.field.values[0];
    for (double v : result.field.values) lowest = std::min(lowest, v);
    CHECK(lowest > 0.0);
    const double center = result.field.values[grid.index(0, 0)];
    CHECK(center == doctest::Approx(20.0 - std::sqrt(399.0)).epsilon(2e-2));
}
