#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cmclab/identities.hpp"
#include "support/test_fields.hpp"

using namespace cmclab;

namespace {
constexpr double kPi = std::numbers::pi;

CheckInput plane_input(const DiskGrid& grid) {
    return CheckInput::from_cap(CapSpec{grid.radius(), 0.0, CapBranch::plane}, grid);
}

CheckInput cap_input(const DiskGrid& grid) {
    return CheckInput::from_cap(cap_from_H(grid.radius(), -0.5), grid);
}
} // namespace

TEST_CASE("plane: every check passes with vanishing residuals") {
    DiskGrid grid(1.0, 16, 32);
    const CheckInput in = plane_input(grid);
    for (const std::string& name : check_names()) {
        const IdentityReport rep = find_check(name)(in, CheckTolerances{});
        INFO("check ", name);
        CHECK(rep.pass);
    }
    CHECK(check_flux(in).residual <= 1e-12);
    CHECK(check_projected_area(in).residual <= 1e-12);
    CHECK(check_green_identity(in).residual <= 1e-12);
    CHECK(check_jacobi(in).residual <= 1e-12);
    CHECK(check_chain(in).residual <= 1e-12);
    CHECK(check_umbilicity(in).residual <= 1e-12);
}

TEST_CASE("exact cap: identity values at 128x256") {
    DiskGrid grid(1.0, 128, 256);
    const CheckInput in = cap_input(grid);

    const IdentityReport flux = check_flux(in);
    CHECK(flux.rhs == doctest::Approx(kPi));
    CHECK(flux.lhs == doctest::Approx(kPi).epsilon(1e-3));
    CHECK(flux.pass);

    const IdentityReport area = check_projected_area(in);
    CHECK(area.rhs == doctest::Approx(kPi));
    CHECK(area.relative_residual <= 1e-3);
    CHECK(area.residual > 0.0);  // the measurement must not be degenerate

    const IdentityReport green = check_green_identity(in);
    CHECK(green.lhs == doctest::Approx(kPi / 2.0).epsilon(1e-2));
    CHECK(green.rhs == doctest::Approx(kPi / 2.0).epsilon(1e-2));
    CHECK(green.pass);

    const IdentityReport bexpr = check_boundary_expression(in);
    CHECK(bexpr.lhs == doctest::Approx(kPi / 2.0).epsilon(1e-2));
    CHECK(bexpr.rhs == doctest::Approx(kPi / 2.0).epsilon(1e-2));
    CHECK(bexpr.pass);

    const IdentityReport cs = check_cauchy_schwarz(in);
    CHECK(cs.residual >= -1e-10);
    CHECK(cs.residual <= 1e-6);  // equality case: <nu,a> constant

    const IdentityReport chain = check_chain(in);
    CHECK(chain.rhs == doctest::Approx(kPi / 2.0));
    CHECK(chain.relative_residual <= 1e-2);

    const IdentityReport umb = check_umbilicity(in);
    CHECK(umb.residual >= -1e-10);
    CHECK(umb.residual <= 0.01 * kPi / 2.0);

    const IdentityReport gauss = check_gauss_variant(in);
    CHECK(gauss.pass);
    CHECK(std::abs(gauss.residual) <= 1e-4);  // equality case up to stencils

    CHECK(check_h_bound(in).pass);
}

TEST_CASE("synthetic Cauchy-Schwarz slack") {
    DiskGrid grid(1.0, 8, 64);
    std::vector<double> psi(grid.n_theta());
    for (int j = 0; j < grid.n_theta(); ++j)
        psi[j] = 0.5 + 0.1 * std::cos(grid.theta(j));
    // integral of (0.1 cos)^2 over the circle = 0.01 pi, and the quadrature
    // is exact for this trigonometric polynomial
    CHECK(cauchy_schwarz_slack(psi, grid) == doctest::Approx(0.01 * kPi).epsilon(1e-12));

    std::vector<double> constant(grid.n_theta(), 0.5);
    CHECK(std::abs(cauchy_schwarz_slack(constant, grid)) < 1e-14);
}

TEST_CASE("solved fields: chain, umbilicity, one-sidedness") {
    const DiskGrid grid(1.0, 64, 128);
    const SolveResult result = solve_dirichlet(1.0, -0.5, SolverConfig{}, grid);
    const CheckInput in = CheckInput::from_solve(result, grid);

    CHECK(check_flux(in).pass);
    CHECK(check_projected_area(in).pass);
    CHECK(check_green_identity(in).pass);
    CHECK(check_chain(in).pass);
    CHECK(check_umbilicity(in).pass);
    CHECK(check_h_bound(in).pass);
    CHECK(check_one_side(in).pass);
    CHECK(check_gauss_variant(in).pass);
    CHECK(check_cauchy_schwarz(in).residual >= -1e-10);

    // H = 0 is the vacuous planar case
    const SolveResult flat = solve_dirichlet(1.0, 0.0, SolverConfig{}, grid);
    const IdentityReport one_side = check_one_side(CheckInput::from_solve(flat, grid));
    CHECK(one_side.pass);
    CHECK(one_side.lhs <= 1e-10);
}

TEST_CASE("non-CMC control: jacobi and umbilicity stay bounded away from zero") {
    const std::vector<DiskGrid> ladder = {DiskGrid(1.0, 32, 64), DiskGrid(1.0, 64, 128),
                                          DiskGrid(1.0, 128, 256)};
    auto control = [](const DiskGrid& grid) {
        return CheckInput::from_field(control_field(grid), -0.5, grid);
    };
    const ConvergenceStudy jac = run_convergence_study("jacobi", control, ladder);
    const double jac0 = jac.reports.front().residual;
    for (const IdentityReport& rep : jac.reports) CHECK(rep.residual >= 0.1 * jac0);

    const ConvergenceStudy umb = run_convergence_study("umbilicity", control, ladder);
    const double umb0 = umb.reports.front().residual;
    for (const IdentityReport& rep : umb.reports) CHECK(rep.residual >= 0.1 * umb0);
}

TEST_CASE("convergence studies on the exact cap") {
    const std::vector<DiskGrid> ladder = {DiskGrid(1.0, 32, 64), DiskGrid(1.0, 64, 128),
                                          DiskGrid(1.0, 128, 256)};
    const ConvergenceStudy area = run_convergence_study("projected_area", cap_input, ladder);
    REQUIRE(area.orders.size() == 2);
    CHECK(area.orders[0] >= 1.9);
    CHECK(area.orders[1] >= 1.9);

    const ConvergenceStudy jac = run_convergence_study("jacobi", cap_input, ladder);
    CHECK(jac.orders[0] >= 1.0);
    CHECK(jac.orders[1] >= 1.0);
    CHECK(jac.reports[0].residual > jac.reports[1].residual);
    CHECK(jac.reports[1].residual > jac.reports[2].residual);

    // equality residuals decrease monotonically along the ladder
    for (const char* name : {"flux", "green_identity", "boundary_expression", "conormal"}) {
        const ConvergenceStudy st = run_convergence_study(name, cap_input, ladder);
        INFO("check ", name);
        for (std::size_t k = 0; k + 1 < st.reports.size(); ++k) {
            const bool tiny = st.reports[k + 1].residual < 1e-10;
            CHECK((tiny || st.reports[k + 1].residual < st.reports[k].residual));
        }
    }

    // flux on the plane is exact at every rung: orders are undefined
    const ConvergenceStudy plane_flux =
        run_convergence_study("flux", plane_input, ladder);
    for (const IdentityReport& rep : plane_flux.reports) CHECK(rep.residual <= 1e-12);
    for (double order : plane_flux.orders) CHECK(std::isnan(order));
}

TEST_CASE("reports are bitwise deterministic") {
    DiskGrid grid(1.0, 32, 64);
    const CheckInput a = cap_input(grid);
    const CheckInput b = cap_input(grid);
    for (const std::string& name : check_names()) {
        const IdentityReport ra = find_check(name)(a, CheckTolerances{});
        const IdentityReport rb = find_check(name)(b, CheckTolerances{});
        CHECK(ra.lhs == rb.lhs);
        CHECK(ra.rhs == rb.rhs);
        CHECK(ra.residual == rb.residual);
    }
}

TEST_CASE("unknown checks are rejected by name") {
    CHECK_THROWS_WITH_AS(find_check("check_foo"), doctest::Contains("check_foo"),
                         std::invalid_argument);
    CHECK_NOTHROW(find_check("check_flux"));  // prefix form accepted
    CHECK_NOTHROW(find_check("flux"));
}

TEST_CASE("inequality checks never report deep negative slack on varied inputs") {
    DiskGrid grid(1.0, 24, 48);
    std::vector<CheckInput> inputs;
    inputs.push_back(plane_input(grid));
    inputs.push_back(cap_input(grid));
    inputs.push_back(CheckInput::from_field(control_field(grid), -0.5, grid));
    inputs.push_back(CheckInput::from_field(
        cmclab::testing::random_smooth_field(grid, 0.3, 8u), -0.1, grid));
    for (const CheckInput& in : inputs) {
        CHECK(check_cauchy_schwarz(in).residual >= -1e-10);
        const UmbilicityDeficit d = umbilicity_deficit(in.frame());
        for (double v : d.per_node) CHECK(v >= -1e-10);
    }
}
