#include "cmclab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace cmclab {

namespace {

constexpr double kPi = std::numbers::pi;

double relative(double residual, double lhs, double rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale > 0.0 ? residual / scale : 0.0;
}

IdentityReport equality_report(const std::string& name, const CheckInput& in,
                               double lhs, double rhs, double rel_tol,
                               double abs_floor) {
    IdentityReport r;
    r.name = name;
    r.n_rho = in.grid().n_rho();
    r.n_theta = in.grid().n_theta();
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = std::abs(lhs - rhs);
    r.relative_residual = relative(r.residual, lhs, rhs);
    r.pass = r.residual <= abs_floor || r.relative_residual <= rel_tol;
    return r;
}

} // namespace

CheckInput CheckInput::from_cap(const CapSpec& spec, const DiskGrid& grid) {
    CheckInput in(grid);
    in.field_ = cap_height_field(spec, grid);
    in.h_target_ = cap_mean_curvature(spec);
    in.oracle_ = cap_exact_values(spec);
    return in;
}

CheckInput CheckInput::from_solve(const SolveResult& result, const DiskGrid& grid) {
    CheckInput in(grid);
    in.field_ = result.field;
    in.h_target_ = result.h_target;
    in.from_solver_ = true;
    in.solver_converged_ = result.converged;
    if (result.h_target <= 0.0)
        in.oracle_ = cap_exact_values(cap_from_H(grid.radius(), result.h_target));
    return in;
}

CheckInput CheckInput::from_field(HeightField field, double h_mean,
                                  const DiskGrid& grid) {
    CheckInput in(grid);
    in.field_ = std::move(field);
    in.h_target_ = h_mean;
    return in;
}

const SurfaceFrame& CheckInput::frame() const {
    if (!frame_) frame_ = std::make_shared<SurfaceFrame>(build_frame(field_, grid_));
    return *frame_;
}

const BoundaryTrace& CheckInput::trace() const {
    if (!trace_) trace_ = std::make_shared<BoundaryTrace>(boundary_trace(frame()));
    return *trace_;
}

IdentityReport check_flux(const CheckInput& in, const CheckTolerances& tol) {
    const double lhs = boundary_integral(in.trace().nu_dot_a, in.grid());
    const double r = in.grid().radius();
    const double rhs = -2.0 * kPi * r * r * in.h_target();
    return equality_report("flux", in, lhs, rhs, tol.flux_rel, tol.equality_abs_floor);
}

IdentityReport check_projected_area(const CheckInput& in, const CheckTolerances& tol) {
    const DiskGrid& grid = in.grid();
    std::vector<double> phi;
    std::string note;
    if (in.oracle()) {
        // Against a catalogued cap, integrate the closed-form <N,a> over the
        // discrete surface measure. Using the frame's own vertical would
        // cancel the W weight identically and measure nothing.
        phi.resize(static_cast<std::size_t>(grid.interior_count()));
        for (int i = 0; i < grid.n_rho(); ++i) {
            const double v = in.oracle()->vertical(grid.rho(i));
            for (int j = 0; j < grid.n_theta(); ++j) phi[grid.index(i, j)] = v;
        }
        note = "phi from exact catalog";
    } else {
        phi = in.frame().vertical;
    }
    const double lhs = surface_integral(phi, in.frame());
    const double r = grid.radius();
    const double rhs = kPi * r * r;
    IdentityReport rep = equality_report("projected_area", in, lhs, rhs,
                                         tol.projected_area_rel,
                                         tol.equality_abs_floor);
    rep.note = note;
    return rep;
}

IdentityReport check_conormal(const CheckInput& in, const CheckTolerances& tol) {
    const double res = conormal_identity_residual(in.trace(), in.frame());
    IdentityReport r;
    r.name = "conormal";
    r.n_rho = in.grid().n_rho();
    r.n_theta = in.grid().n_theta();
    r.lhs = res;
    r.rhs = 0.0;
    r.residual = res;
    r.relative_residual = res;  // <nu,a> is O(1), so the max gap is already relative
    r.pass = res <= tol.conormal_abs;
    return r;
}

IdentityReport check_jacobi(const CheckInput& in, const CheckTolerances& tol) {
    const DiskGrid& grid = in.grid();
    const SurfaceFrame& frame = in.frame();
    const BoundaryTrace& trace = in.trace();

    std::vector<double> vertical_ring(static_cast<std::size_t>(grid.n_theta()));
    for (int j = 0; j < grid.n_theta(); ++j) vertical_ring[j] = trace.normal[j].z;
    const std::vector<double> lap =
        laplace_beltrami(frame.vertical, vertical_ring, frame);

    // Interior L2 norm, excluding the two rings nearest the boundary where
    // one-sided stencils dominate the error.
    const int last = grid.n_rho() - 2;
    double acc = 0.0, scale_acc = 0.0;
    for (int i = 0; i < last; ++i) {
        const double rho = grid.rho(i);
        for (int j = 0; j < grid.n_theta(); ++j) {
            const int id = grid.index(i, j);
            const double value = lap[id] + frame.sigma_sq[id] * frame.vertical[id];
            const double ds = frame.w[id] * rho * grid.h_rho() * grid.h_theta();
            acc += value * value * ds;
            const double s = frame.sigma_sq[id] * frame.vertical[id];
            scale_acc += s * s * ds;
        }
    }
    IdentityReport r;
    r.name = "jacobi";
    r.n_rho = grid.n_rho();
    r.n_theta = grid.n_theta();
    r.lhs = std::sqrt(acc);
    r.rhs = 0.0;
    r.residual = r.lhs;
    const double scale = std::sqrt(scale_acc);
    r.relative_residual = scale > 0.0 ? r.residual / scale : r.residual;
    r.pass = r.residual <= tol.equality_abs_floor || r.relative_residual <= tol.jacobi_rel;
    r.note = "two boundary rings excluded";
    return r;
}

IdentityReport check_green_identity(const CheckInput& in, const CheckTolerances& tol) {
    const SurfaceFrame& frame = in.frame();
    std::vector<double> integrand(frame.sigma_sq.size());
    for (std::size_t id = 0; id < integrand.size(); ++id)
        integrand[id] = frame.sigma_sq[id] * frame.vertical[id];
    const double lhs = surface_integral(integrand, frame);
    const double rhs = boundary_integral(in.trace().dNnu_dot_a, in.grid());
    return equality_report("green_identity", in, lhs, rhs, tol.green_rel,
                           tol.equality_abs_floor);
}

IdentityReport check_boundary_expression(const CheckInput& in,
                                         const CheckTolerances& tol) {
    const DiskGrid& grid = in.grid();
    const double r = grid.radius();
    const double h = in.h_target();
    const double lhs = boundary_integral(in.trace().dNnu_dot_a, grid);
    std::vector<double> nu_sq(in.trace().nu_dot_a.size());
    for (std::size_t j = 0; j < nu_sq.size(); ++j)
        nu_sq[j] = in.trace().nu_dot_a[j] * in.trace().nu_dot_a[j];
    const double rhs =
        4.0 * kPi * r * r * h * h - boundary_integral(nu_sq, grid) / r;
    return equality_report("boundary_expression", in, lhs, rhs,
                           tol.boundary_expression_rel, tol.equality_abs_floor);
}

double cauchy_schwarz_slack(const std::vector<double>& psi, const DiskGrid& grid) {
    std::vector<double> sq(psi.size());
    for (std::size_t j = 0; j < psi.size(); ++j) sq[j] = psi[j] * psi[j];
    const double mean_sq = boundary_integral(sq, grid);
    const double mean = boundary_integral(psi, grid);
    return mean_sq - mean * mean / (2.0 * kPi * grid.radius());
}

IdentityReport check_cauchy_schwarz(const CheckInput& in, const CheckTolerances& tol) {
    const double slack = cauchy_schwarz_slack(in.trace().nu_dot_a, in.grid());
    const double r = in.grid().radius();
    const double h = in.h_target();
    IdentityReport rep;
    rep.name = "cauchy_schwarz";
    rep.n_rho = in.grid().n_rho();
    rep.n_theta = in.grid().n_theta();
    rep.lhs = slack;
    rep.rhs = 0.0;
    rep.residual = slack;
    const double scale = 2.0 * kPi * r * r * r * h * h;
    rep.relative_residual = scale > 0.0 ? std::abs(slack) / scale : std::abs(slack);
    rep.pass = slack >= -tol.neg_slack;
    return rep;
}

IdentityReport check_chain(const CheckInput& in, const CheckTolerances& tol) {
    const DiskGrid& grid = in.grid();
    const double r = grid.radius();
    const double h = in.h_target();
    const SurfaceFrame& frame = in.frame();

    const double v1 = 2.0 * kPi * r * r * h * h;
    std::vector<double> integrand(frame.sigma_sq.size());
    for (std::size_t id = 0; id < integrand.size(); ++id)
        integrand[id] = frame.sigma_sq[id] * frame.vertical[id];
    const double v2 = surface_integral(integrand, frame);
    const double v3 = boundary_integral(in.trace().dNnu_dot_a, grid);

    const double dev = std::max({std::abs(v1 - v2), std::abs(v1 - v3), std::abs(v2 - v3)});
    IdentityReport rep;
    rep.name = "chain";
    rep.n_rho = grid.n_rho();
    rep.n_theta = grid.n_theta();
    rep.lhs = v2;   // the surface integral, the middle link of the chain
    rep.rhs = v1;   // 2 pi r^2 H^2
    rep.residual = dev;
    const double scale = std::max({std::abs(v1), std::abs(v2), std::abs(v3)});
    rep.relative_residual = scale > 0.0 ? dev / scale : dev;
    rep.pass = rep.residual <= tol.equality_abs_floor ||
               rep.relative_residual <= tol.chain_rel;
    rep.note = "boundary value " + std::to_string(v3);
    return rep;
}

IdentityReport check_umbilicity(const CheckInput& in, const CheckTolerances& tol) {
    const double deficit = umbilicity_deficit(in.frame()).integrated;
    const double r = in.grid().radius();
    const double h = in.h_target();
    const double scale = 2.0 * kPi * r * r * h * h;
    IdentityReport rep;
    rep.name = "umbilicity";
    rep.n_rho = in.grid().n_rho();
    rep.n_theta = in.grid().n_theta();
    rep.lhs = deficit;
    rep.rhs = 0.0;
    rep.residual = deficit;
    rep.relative_residual = scale > 0.0 ? deficit / scale : deficit;
    rep.pass = h != 0.0 ? deficit <= std::max(tol.umbilicity_frac * scale, tol.umbilicity_abs)
                        : deficit <= tol.umbilicity_abs;
    return rep;
}

IdentityReport check_h_bound(const CheckInput& in, const CheckTolerances& tol) {
    const DiskGrid& grid = in.grid();
    const double r = grid.radius();
    const double flux = boundary_flux(in.field(), grid);
    const BoundaryTrace& trace = in.trace();
    double max_tilt = 0.0;  // |grad f| / W = sqrt(1 - <N,a>^2) on the circle
    for (const Vector3& nrm : trace.normal)
        max_tilt = std::max(max_tilt, std::sqrt(std::max(0.0, 1.0 - nrm.z * nrm.z)));

    const double circumference = 2.0 * kPi * r;
    IdentityReport rep;
    rep.name = "h_bound";
    rep.n_rho = grid.n_rho();
    rep.n_theta = grid.n_theta();
    rep.lhs = std::abs(flux);
    rep.rhs = circumference;
    rep.residual = circumference - std::abs(flux);  // strict-inequality margin
    rep.relative_residual = rep.residual / circumference;
    const bool h_ok = std::abs(in.h_target()) < 1.0 / r;
    const bool tilt_ok = max_tilt < 1.0;
    const bool flux_ok =
        std::abs(flux) <= circumference * max_tilt + tol.neg_slack && rep.residual > 0.0;
    rep.pass = h_ok && tilt_ok && flux_ok;
    rep.note = "max tilt " + std::to_string(max_tilt);
    return rep;
}

IdentityReport check_one_side(const CheckInput& in, const CheckTolerances& tol) {
    IdentityReport rep;
    rep.name = "one_side";
    rep.n_rho = in.grid().n_rho();
    rep.n_theta = in.grid().n_theta();
    const std::vector<double>& f = in.field().values;
    if (in.h_target() == 0.0) {
        double sup = 0.0;
        for (double v : f) sup = std::max(sup, std::abs(v));
        rep.lhs = sup;
        rep.rhs = 0.0;
        rep.residual = sup;
        rep.relative_residual = sup;
        rep.pass = sup <= tol.one_side_flat_abs;
        rep.note = "H = 0: planar case, checking ||f||_inf";
        return rep;
    }
    const double sign = in.h_target() < 0.0 ? 1.0 : -1.0;
    double lowest = std::numeric_limits<double>::infinity();
    for (double v : f) lowest = std::min(lowest, sign * v);
    rep.lhs = lowest;
    rep.rhs = 0.0;
    rep.residual = std::max(0.0, -lowest);
    rep.relative_residual = rep.residual;
    rep.pass = lowest > 0.0;
    return rep;
}

IdentityReport check_gauss_variant(const CheckInput& in, const CheckTolerances& tol) {
    const SurfaceFrame& frame = in.frame();
    IdentityReport rep;
    rep.name = "gauss_variant";
    rep.n_rho = in.grid().n_rho();
    rep.n_theta = in.grid().n_theta();

    double min_k = std::numeric_limits<double>::infinity();
    for (double k : frame.k_gauss) min_k = std::min(min_k, k);
    if (min_k < -tol.neg_slack) {
        rep.pass = true;
        rep.note = "inapplicable: K < 0 present";
        return rep;
    }

    // Slack of int |sigma|^2 <N,a> >= 2 H^2 int <N,a> in the nodal form
    // 2 (H^2 - K) <N,a> >= 0, plus the pointwise bound K <N,a> <= H^2.
    std::vector<double> upper(frame.k_gauss.size()), lower(frame.k_gauss.size());
    double max_pointwise = -std::numeric_limits<double>::infinity();
    for (std::size_t id = 0; id < frame.k_gauss.size(); ++id) {
        const double h2 = frame.h_mean[id] * frame.h_mean[id];
        upper[id] = 2.0 * h2 * frame.vertical[id];
        lower[id] = 2.0 * frame.k_gauss[id] * frame.vertical[id];
        max_pointwise =
            std::max(max_pointwise, frame.k_gauss[id] * frame.vertical[id] - h2);
    }
    const double slack =
        surface_integral(upper, frame) - surface_integral(lower, frame);
    rep.lhs = slack;
    rep.rhs = 0.0;
    rep.residual = slack;
    rep.relative_residual = std::abs(slack);
    rep.pass = slack >= -tol.neg_slack && max_pointwise <= tol.gauss_pointwise_abs;
    rep.note = "max K<N,a> - H^2 = " + std::to_string(max_pointwise);
    return rep;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "flux",        "projected_area", "conormal",    "jacobi",
        "green_identity", "boundary_expression", "cauchy_schwarz", "chain",
        "umbilicity",  "h_bound",        "one_side",    "gauss_variant"};
    return names;
}

CheckFn find_check(const std::string& raw) {
    static const std::map<std::string, CheckFn> registry = {
        {"flux", check_flux},
        {"projected_area", check_projected_area},
        {"conormal", check_conormal},
        {"jacobi", check_jacobi},
        {"green_identity", check_green_identity},
        {"boundary_expression", check_boundary_expression},
        {"cauchy_schwarz", check_cauchy_schwarz},
        {"chain", check_chain},
        {"umbilicity", check_umbilicity},
        {"h_bound", check_h_bound},
        {"one_side", check_one_side},
        {"gauss_variant", check_gauss_variant}};
    std::string name = raw;
    if (name.rfind("check_", 0) == 0) name = name.substr(6);
    const auto it = registry.find(name);
    if (it == registry.end())
        throw std::invalid_argument("unknown check \"" + raw + "\"");
    return it->second;
}

std::vector<IdentityReport> run_checks(const std::vector<std::string>& names,
                                       const CheckInput& in,
                                       const CheckTolerances& tol) {
    std::vector<IdentityReport> out;
    out.reserve(names.size());
    for (const std::string& name : names) out.push_back(find_check(name)(in, tol));
    return out;
}

ConvergenceStudy run_convergence_study(const std::string& check_name,
                                       const InputFactory& make_input,
                                       const std::vector<DiskGrid>& ladder,
                                       const CheckTolerances& tol) {
    if (ladder.size() < 2)
        throw std::invalid_argument("run_convergence_study: ladder needs at least 2 rungs");
    ConvergenceStudy study;
    study.check_name = check_name;
    const CheckFn fn = find_check(check_name);
    for (const DiskGrid& grid : ladder) {
        const CheckInput in = make_input(grid);
        study.reports.push_back(fn(in, tol));
    }
    constexpr double underflow = 1e-14;
    for (std::size_t k = 0; k + 1 < study.reports.size(); ++k) {
        const double a = std::abs(study.reports[k].residual);
        const double b = std::abs(study.reports[k + 1].residual);
        if (a < underflow || b < underflow)
            study.orders.push_back(std::numeric_limits<double>::quiet_NaN());
        else
            study.orders.push_back(std::log2(a / b));
    }
    return study;
}

HeightField control_field(const DiskGrid& grid) {
    HeightField f = HeightField::zero(grid);
    const double r = grid.radius();
    for (int i = 0; i < grid.n_rho(); ++i) {
        const double s = grid.rho(i) / r;
        for (int j = 0; j < grid.n_theta(); ++j)
            f.values[grid.index(i, j)] =
                0.2 * (1.0 - s * s) * (1.0 + 0.3 * std::cos(grid.theta(j)));
    }
    return f;
}

} // namespace cmclab
