#pragma once

#include <vector>

#include "cmclab/exact.hpp"
#include "cmclab/grid.hpp"

namespace cmclab {

struct SolverConfig {
    double newton_tol = 1e-10;      // target for the discrete L2 residual norm
    int max_newton_iters = 50;      // total budget across all continuation steps
    double damping_factor = 0.5;    // backtracking factor of the line search
    double min_step = 1.0 / 64.0;   // smallest accepted line-search step
    int continuation_steps = 10;    // uniform steps in H from 0 to the target
    double h_max_fraction = 0.95;   // reject |H| > h_max_fraction / r
    double linear_tol = 1e-12;      // relative tolerance of the inner solve
    int linear_max_iters = 400;

    void validate() const;
};

struct SolveResult {
    HeightField field;
    double h_target = 0.0;
    bool converged = false;
    double final_residual = 0.0;
    int total_newton_iters = 0;
    std::vector<double> residual_history;   // discrete L2 norms, every Newton iterate
    std::vector<double> continuation_path;  // intermediate H values solved
    std::vector<int> stage_iterations;      // Newton iterations per continuation step
};

// Residual of the graph equation div(grad f / W) - 2H in finite-volume
// form: net flux of grad f / W through each polar cell's faces divided by
// the flat cell area, minus 2H. Interior face fluxes cancel in pairs, so
//   sum(residual * cell_area) + 2H * disk_area == boundary flux
// holds to rounding.
std::vector<double> cmc_residual(const HeightField& field, double h_mean,
                                 const DiskGrid& grid);

// Outward flux of grad f / W through the boundary circle.
double boundary_flux(const HeightField& field, const DiskGrid& grid);

// Directional derivative of cmc_residual at `field` along `direction`
// (interior values; the direction vanishes on the boundary ring),
// obtained by differentiating the discrete flux formula.
std::vector<double> jacobian_apply(const HeightField& field,
                                   const std::vector<double>& direction,
                                   double h_mean, const DiskGrid& grid);

// Damped Newton with continuation in H, starting from the flat solution.
// Throws HOutOfRange when |H| exceeds the configured window; a stalled
// Newton iteration returns converged = false with the residual history.
SolveResult solve_dirichlet(double r, double h_mean, const SolverConfig& config,
                            const DiskGrid& grid);

struct ErrorNorms {
    double linf = 0.0;
    double l2 = 0.0;
};

// Nodewise error of a solve against a catalogued cap on the same disk.
ErrorNorms error_vs_exact(const SolveResult& result, const CapSpec& spec,
                          const DiskGrid& grid);

// Area-weighted discrete L2 norm over interior cells.
double residual_norm(const std::vector<double>& values, const DiskGrid& grid);

} // namespace cmclab
