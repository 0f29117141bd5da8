#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cmclab/exact.hpp"
#include "cmclab/frame.hpp"
#include "cmclab/grid.hpp"
#include "cmclab/quadrature.hpp"
#include "cmclab/solver.hpp"

namespace cmclab {

// One named verification: an integral identity, an inequality, or a
// theorem conclusion, evaluated on a concrete field at one resolution.
struct IdentityReport {
    std::string name;
    int n_rho = 0;
    int n_theta = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;           // |lhs - rhs|, or inequality slack
    double relative_residual = 0.0;
    bool pass = false;
    std::string note;
};

// Default pass tolerances, chosen so the exact-cap oracle passes on the
// coarsest ladder rung; stricter values are pinned where they matter.
struct CheckTolerances {
    double flux_rel = 0.02;
    double projected_area_rel = 0.02;
    double conormal_abs = 0.02;
    double jacobi_rel = 0.5;
    double green_rel = 0.08;
    double boundary_expression_rel = 0.08;
    double chain_rel = 0.08;
    double umbilicity_frac = 0.02;
    double umbilicity_abs = 1e-8;
    double one_side_flat_abs = 1e-10;
    double neg_slack = 1e-10;        // inequality checks may dip this far
    double gauss_pointwise_abs = 1e-8;
    double equality_abs_floor = 1e-10;
};

// A field under test plus what is known about it. Frames and traces are
// built once on demand and shared between checks.
class CheckInput {
public:
    static CheckInput from_cap(const CapSpec& spec, const DiskGrid& grid);
    static CheckInput from_solve(const SolveResult& result, const DiskGrid& grid);
    static CheckInput from_field(HeightField field, double h_mean,
                                 const DiskGrid& grid);

    const DiskGrid& grid() const { return grid_; }
    const HeightField& field() const { return field_; }
    double h_target() const { return h_target_; }
    const std::optional<CapExactValues>& oracle() const { return oracle_; }
    bool from_solver() const { return from_solver_; }
    bool solver_converged() const { return solver_converged_; }

    const SurfaceFrame& frame() const;
    const BoundaryTrace& trace() const;

private:
    explicit CheckInput(DiskGrid grid) : grid_(std::move(grid)) {}

    DiskGrid grid_;
    HeightField field_;
    double h_target_ = 0.0;
    std::optional<CapExactValues> oracle_;
    bool from_solver_ = false;
    bool solver_converged_ = false;
    mutable std::shared_ptr<SurfaceFrame> frame_;
    mutable std::shared_ptr<BoundaryTrace> trace_;
};

// The checks. Equality checks report |lhs - rhs|; inequality checks
// report the slack, which must not fall below -neg_slack.
IdentityReport check_flux(const CheckInput& in, const CheckTolerances& tol = {});
IdentityReport check_projected_area(const CheckInput& in, const CheckTolerances& tol = {});
IdentityReport check_conormal(const CheckInput& in, const CheckTolerances& tol = {});
IdentityReport check_jacobi(const CheckInput& in, const CheckTolerances& tol = {});
IdentityReport check_green_identity(const CheckInput& in, const CheckTolerances& tol = {});
IdentityReport check_boundary_expression(const CheckInput& in, const CheckTolerances& tol = {});
IdentityReport check_cauchy_schwarz(const CheckInput& in, const CheckTolerances& tol = {});
IdentityReport check_chain(const CheckInput& in, const CheckTolerances& tol = {});
IdentityReport check_umbilicity(const CheckInput& in, const CheckTolerances& tol = {});
IdentityReport check_h_bound(const CheckInput& in, const CheckTolerances& tol = {});
IdentityReport check_one_side(const CheckInput& in, const CheckTolerances& tol = {});
IdentityReport check_gauss_variant(const CheckInput& in, const CheckTolerances& tol = {});

// Cauchy-Schwarz slack of an arbitrary boundary sample, exposed so the
// inequality plumbing can be unit tested on synthetic traces.
double cauchy_schwarz_slack(const std::vector<double>& psi, const DiskGrid& grid);

using CheckFn = std::function<IdentityReport(const CheckInput&, const CheckTolerances&)>;

// Registered check names in canonical order. Lookup accepts an optional
// "check_" prefix. Throws std::invalid_argument for unknown names.
const std::vector<std::string>& check_names();
CheckFn find_check(const std::string& name);
std::vector<IdentityReport> run_checks(const std::vector<std::string>& names,
                                       const CheckInput& in,
                                       const CheckTolerances& tol = {});

// Residual decay of one check along a refinement ladder.
struct ConvergenceStudy {
    std::string check_name;
    std::vector<IdentityReport> reports;
    std::vector<double> orders;  // log2(residual_i / residual_{i+1}); NaN when
                                 // a residual underflows (exact at precision)
};

using InputFactory = std::function<CheckInput(const DiskGrid&)>;

ConvergenceStudy run_convergence_study(const std::string& check_name,
                                       const InputFactory& make_input,
                                       const std::vector<DiskGrid>& ladder,
                                       const CheckTolerances& tol = {});

// The designated non-CMC control field 0.2 (1 - (rho/r)^2)(1 + 0.3 cos theta).
HeightField control_field(const DiskGrid& grid);

} // namespace cmclab
