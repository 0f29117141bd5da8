#include "cmclab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "cmclab/stencils.hpp"

namespace cmclab {

void SolverConfig::validate() const {
    if (!(newton_tol > 0.0) || !(linear_tol > 0.0))
        throw std::invalid_argument("SolverConfig: tolerances must be positive");
    if (max_newton_iters < 1 || continuation_steps < 1 || linear_max_iters < 1)
        throw std::invalid_argument("SolverConfig: iteration counts must be positive");
    if (!(damping_factor > 0.0 && damping_factor < 1.0) || !(min_step > 0.0))
        throw std::invalid_argument("SolverConfig: invalid line-search parameters");
    if (!(h_max_fraction > 0.0 && h_max_fraction < 1.0))
        throw std::invalid_argument("SolverConfig: h_max_fraction must lie in (0, 1)");
}

namespace {

// Per-face slope data of a ring-augmented scalar. Radial face i sits at
// rho = (i+1)h between rings i and i+1; index i = n_rho-1 is the face on
// the boundary circle. Angular face (i, j) sits at theta_{j+1/2}.
struct FaceSlopes {
    std::vector<double> rad_p, rad_q;  // f_rho, f_theta at radial faces
    std::vector<double> ang_p, ang_q;  // f_rho, f_theta at angular faces
};

FaceSlopes face_slopes(const std::vector<double>& v, const std::vector<double>& ring,
                       const DiskGrid& grid) {
    const int n = grid.n_rho();
    const int m = grid.n_theta();
    const double h = grid.h_rho();
    const double face_den = 2.0 * std::sin(0.5 * grid.h_theta());
    const auto wb = boundary_face_derivative_weights(h);

    const std::vector<double> v_rho = radial_derivative(v, ring, grid);
    const std::vector<double> v_theta = angular_derivative(v, grid);
    const std::vector<double> ring_theta = ring_theta_derivative(ring, grid);

    FaceSlopes fs;
    fs.rad_p.resize(v.size());
    fs.rad_q.resize(v.size());
    fs.ang_p.resize(v.size());
    fs.ang_q.resize(v.size());

    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j < m; ++j) {
            const int a = grid.index(i, j);
            const int b = grid.index(i + 1, j);
            fs.rad_p[a] = (v[b] - v[a]) / h;
            fs.rad_q[a] = 0.5 * (v_theta[a] + v_theta[b]);
        }
    for (int j = 0; j < m; ++j) {
        const int a = grid.index(n - 1, j);
        fs.rad_p[a] = wb[0] * (ring[j] - v[a]) +
                      wb[2] * (v[grid.index(n - 2, j)] - v[a]) +
                      wb[3] * (v[grid.index(n - 3, j)] - v[a]);
        fs.rad_q[a] = ring_theta[j];
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const int a = grid.index(i, j);
            const int b = grid.index(i, j + 1);
            fs.ang_q[a] = (v[b] - v[a]) / face_den;
            fs.ang_p[a] = 0.5 * (v_rho[a] + v_rho[b]);
        }
    return fs;
}

double radial_face_rho(const DiskGrid& grid, int i) {
    return i + 1 < grid.n_rho() ? (i + 1) * grid.h_rho() : grid.radius();
}

// Flux factors and their derivatives for V = grad f / W. Radial faces
// carry flux rho_f * V_rho * h_theta, angular faces V_theta * h_rho.
struct FluxLinearization {
    std::vector<double> rad_dp, rad_dq;  // d(radial flux)/d(p), /d(q)
    std::vector<double> ang_dp, ang_dq;
};

std::vector<double> face_fluxes_radial(const FaceSlopes& fs, const DiskGrid& grid) {
    const int n = grid.n_rho();
    const int m = grid.n_theta();
    std::vector<double> flux(fs.rad_p.size());
    for (int i = 0; i < n; ++i) {
        const double rho_f = radial_face_rho(grid, i);
        for (int j = 0; j < m; ++j) {
            const int a = grid.index(i, j);
            const double p = fs.rad_p[a];
            const double qs = fs.rad_q[a] / rho_f;
            const double w = std::sqrt(1.0 + p * p + qs * qs);
            flux[a] = rho_f * (p / w) * grid.h_theta();
        }
    }
    return flux;
}

std::vector<double> face_fluxes_angular(const FaceSlopes& fs, const DiskGrid& grid) {
    const int n = grid.n_rho();
    const int m = grid.n_theta();
    std::vector<double> flux(fs.ang_p.size());
    for (int i = 0; i < n; ++i) {
        const double rho_f = grid.rho(i);
        for (int j = 0; j < m; ++j) {
            const int a = grid.index(i, j);
            const double p = fs.ang_p[a];
            const double q = fs.ang_q[a];
            const double qs = q / rho_f;
            const double w = std::sqrt(1.0 + p * p + qs * qs);
            flux[a] = (q / (rho_f * w)) * grid.h_rho();
        }
    }
    return flux;
}

FluxLinearization linearize_fluxes(const FaceSlopes& fs, const DiskGrid& grid) {
    const int n = grid.n_rho();
    const int m = grid.n_theta();
    FluxLinearization lin;
    lin.rad_dp.resize(fs.rad_p.size());
    lin.rad_dq.resize(fs.rad_p.size());
    lin.ang_dp.resize(fs.ang_p.size());
    lin.ang_dq.resize(fs.ang_p.size());
    for (int i = 0; i < n; ++i) {
        const double rho_f = radial_face_rho(grid, i);
        for (int j = 0; j < m; ++j) {
            const int a = grid.index(i, j);
            const double p = fs.rad_p[a];
            const double q = fs.rad_q[a];
            const double qs = q / rho_f;
            const double w = std::sqrt(1.0 + p * p + qs * qs);
            const double w3 = w * w * w;
            lin.rad_dp[a] = rho_f * grid.h_theta() * (1.0 + qs * qs) / w3;
            lin.rad_dq[a] = rho_f * grid.h_theta() * (-p * q / (rho_f * rho_f)) / w3;
        }
    }
    for (int i = 0; i < n; ++i) {
        const double rho_f = grid.rho(i);
        for (int j = 0; j < m; ++j) {
            const int a = grid.index(i, j);
            const double p = fs.ang_p[a];
            const double q = fs.ang_q[a];
            const double qs = q / rho_f;
            const double w = std::sqrt(1.0 + p * p + qs * qs);
            const double w3 = w * w * w;
            lin.ang_dp[a] = grid.h_rho() * (-p * q / rho_f) / w3;
            lin.ang_dq[a] = grid.h_rho() * (1.0 + p * p) / (rho_f * w3);
        }
    }
    return lin;
}

// Scatter per-face fluxes into per-cell net outward fluxes.
std::vector<double> net_flux(const std::vector<double>& rad,
                             const std::vector<double>& ang, const DiskGrid& grid) {
    const int n = grid.n_rho();
    const int m = grid.n_theta();
    std::vector<double> net(rad.size(), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const int a = grid.index(i, j);
            net[a] += rad[a];
            if (i + 1 < n) net[grid.index(i + 1, j)] -= rad[a];
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const int a = grid.index(i, j);
            net[a] += ang[a];
            net[grid.index(i, j + 1)] -= ang[a];
        }
    return net;
}

// Net-flux linearization applied to a direction with zero ring values.
std::vector<double> apply_netflux_jacobian(const FluxLinearization& lin,
                                           const std::vector<double>& u,
                                           const DiskGrid& grid) {
    const std::vector<double> zero_ring(static_cast<std::size_t>(grid.n_theta()), 0.0);
    const FaceSlopes du = face_slopes(u, zero_ring, grid);

    std::vector<double> rad(u.size()), ang(u.size());
    for (std::size_t a = 0; a < u.size(); ++a) {
        rad[a] = lin.rad_dp[a] * du.rad_p[a] + lin.rad_dq[a] * du.rad_q[a];
        ang[a] = lin.ang_dp[a] * du.ang_p[a] + lin.ang_dq[a] * du.ang_q[a];
    }
    return net_flux(rad, ang, grid);
}

// ---------------------------------------------------------------------
// Inner linear solve: preconditioned CG on the area-weighted Jacobian.
//
// The preconditioner diagonalizes the angular direction by a discrete
// Fourier transform and solves a banded system per mode. It is built
// from theta-averaged face coefficients, which makes it the exact
// Jacobian whenever the current iterate is rotationally symmetric (the
// whole continuation path for g == 0), so CG typically converges in a
// couple of iterations.
// ---------------------------------------------------------------------

void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) *
                           (inverse ? 1.0 : -1.0);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> even = a[i + k];
                const std::complex<double> odd = a[i + k + len / 2] * w;
                a[i + k] = even + odd;
                a[i + k + len / 2] = even - odd;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& v : a) v /= static_cast<double>(n);
}

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

class ModePreconditioner {
public:
    ModePreconditioner(const FluxLinearization& lin, const DiskGrid& grid)
        : grid_(grid), n_(grid.n_rho()), m_(grid.n_theta()) {
        const double h = grid.h_rho();
        const double face_den = 2.0 * std::sin(0.5 * grid.h_theta());
        const auto wb = boundary_face_derivative_weights(h);

        std::vector<double> cr(n_ - 1, 0.0);  // radial coupling i <-> i+1
        std::vector<double> ct(n_, 0.0);      // angular coupling per ring
        double cb = 0.0;                      // boundary face strength
        for (int i = 0; i + 1 < n_; ++i) {
            for (int j = 0; j < m_; ++j) cr[i] += lin.rad_dp[grid.index(i, j)];
            cr[i] /= m_ * h;
        }
        for (int j = 0; j < m_; ++j) cb += lin.rad_dp[grid.index(n_ - 1, j)];
        cb /= m_;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < m_; ++j) ct[i] += lin.ang_dq[grid.index(i, j)];
            ct[i] /= m_ * face_den;
        }

        // One banded factorization per angular mode. Row n-1 reaches back
        // to column n-3 through the one-sided boundary face stencil, so
        // bands (sub2, sub, diag, sup) are enough.
        sub2_.assign(static_cast<std::size_t>(m_) * n_, 0.0);
        sub_.assign(static_cast<std::size_t>(m_) * n_, 0.0);
        diag_.assign(static_cast<std::size_t>(m_) * n_, 0.0);
        sup_.assign(static_cast<std::size_t>(m_) * n_, 0.0);

        for (int k = 0; k < m_; ++k) {
            const double mu = 2.0 * (std::cos(k * grid.h_theta()) - 1.0);
            double* s2 = &sub2_[static_cast<std::size_t>(k) * n_];
            double* s1 = &sub_[static_cast<std::size_t>(k) * n_];
            double* dg = &diag_[static_cast<std::size_t>(k) * n_];
            double* sp = &sup_[static_cast<std::size_t>(k) * n_];
            for (int i = 0; i < n_; ++i) {
                double d = mu * ct[i];
                if (i + 1 < n_) {
                    d -= cr[i];
                    sp[i] = cr[i];
                }
                if (i > 0) {
                    d -= cr[i - 1];
                    s1[i] = cr[i - 1];
                }
                dg[i] = d;
            }
            dg[n_ - 1] += cb * (-(wb[0] + wb[2] + wb[3]));
            s1[n_ - 1] += cb * wb[2];
            s2[n_ - 1] += cb * wb[3];

            // Work on the negated matrix so diagonals stay positive, then
            // eliminate in place (no pivoting; rows are diagonally dominant).
            for (int i = 0; i < n_; ++i) {
                s2[i] = -s2[i];
                s1[i] = -s1[i];
                dg[i] = -dg[i];
                sp[i] = -sp[i];
            }
            for (int i = 1; i + 1 < n_; ++i) {
                const double l = s1[i] / dg[i - 1];
                s1[i] = l;
                dg[i] -= l * sp[i - 1];
            }
            // Last row carries an extra entry at column n-3; eliminate it
            // against row n-3 first, then proceed as in the tridiagonal case.
            {
                const int i = n_ - 1;
                const double l2 = s2[i] / dg[i - 2];
                s2[i] = l2;
                s1[i] -= l2 * sp[i - 2];
                const double l1 = s1[i] / dg[i - 1];
                s1[i] = l1;
                dg[i] -= l1 * sp[i - 1];
            }
        }
        use_fft_ = is_power_of_two(m_);
        if (!use_fft_) {
            cos_.resize(static_cast<std::size_t>(m_) * m_);
            sin_.resize(static_cast<std::size_t>(m_) * m_);
            for (int k = 0; k < m_; ++k)
                for (int j = 0; j < m_; ++j) {
                    const double ang = 2.0 * std::numbers::pi * k * j / m_;
                    cos_[static_cast<std::size_t>(k) * m_ + j] = std::cos(ang);
                    sin_[static_cast<std::size_t>(k) * m_ + j] = std::sin(ang);
                }
        }
    }

    // Solves M z = rhs where M is the negated mode operator.
    std::vector<double> apply(const std::vector<double>& rhs) const {
        std::vector<std::complex<double>> spec(static_cast<std::size_t>(n_) * m_);
        // forward transform along theta, ring by ring
        for (int i = 0; i < n_; ++i) {
            if (use_fft_) {
                std::vector<std::complex<double>> row(m_);
                for (int j = 0; j < m_; ++j) row[j] = rhs[grid_.index(i, j)];
                fft_inplace(row, false);
                for (int k = 0; k < m_; ++k) spec[static_cast<std::size_t>(k) * n_ + i] = row[k];
            } else {
                for (int k = 0; k < m_; ++k) {
                    std::complex<double> acc(0.0, 0.0);
                    for (int j = 0; j < m_; ++j) {
                        const double v = rhs[grid_.index(i, j)];
                        acc += std::complex<double>(
                            v * cos_[static_cast<std::size_t>(k) * m_ + j],
                            -v * sin_[static_cast<std::size_t>(k) * m_ + j]);
                    }
                    spec[static_cast<std::size_t>(k) * n_ + i] = acc;
                }
            }
        }
        // banded solve per mode (real factors, complex right-hand side)
        std::vector<std::complex<double>> x(n_);
        for (int k = 0; k < m_; ++k) {
            const double* s2 = &sub2_[static_cast<std::size_t>(k) * n_];
            const double* s1 = &sub_[static_cast<std::size_t>(k) * n_];
            const double* dg = &diag_[static_cast<std::size_t>(k) * n_];
            const double* sp = &sup_[static_cast<std::size_t>(k) * n_];
            std::complex<double>* b = &spec[static_cast<std::size_t>(k) * n_];
            for (int i = 0; i < n_; ++i) {
                x[i] = b[i];
                if (i > 0) x[i] -= s1[i] * x[i - 1];
                if (i == n_ - 1 && n_ >= 3) x[i] -= s2[i] * x[i - 2];
            }
            for (int i = n_ - 1; i >= 0; --i) {
                if (i + 1 < n_) x[i] -= sp[i] * x[i + 1];
                x[i] /= dg[i];
            }
            for (int i = 0; i < n_; ++i) b[i] = x[i];
        }
        // inverse transform
        std::vector<double> out(rhs.size());
        for (int i = 0; i < n_; ++i) {
            if (use_fft_) {
                std::vector<std::complex<double>> row(m_);
                for (int k = 0; k < m_; ++k) row[k] = spec[static_cast<std::size_t>(k) * n_ + i];
                fft_inplace(row, true);
                for (int j = 0; j < m_; ++j) out[grid_.index(i, j)] = row[j].real();
            } else {
                for (int j = 0; j < m_; ++j) {
                    std::complex<double> acc(0.0, 0.0);
                    for (int k = 0; k < m_; ++k) {
                        const std::complex<double> w(
                            cos_[static_cast<std::size_t>(k) * m_ + j],
                            sin_[static_cast<std::size_t>(k) * m_ + j]);
                        acc += spec[static_cast<std::size_t>(k) * n_ + i] * w;
                    }
                    out[grid_.index(i, j)] = acc.real() / m_;
                }
            }
        }
        return out;
    }

private:
    const DiskGrid& grid_;
    int n_, m_;
    bool use_fft_ = false;
    std::vector<double> sub2_, sub_, diag_, sup_;
    std::vector<double> cos_, sin_;
};

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// PCG on A = -(net-flux Jacobian), positive definite away from the
// boundary rows. The preconditioner is exact for rotationally symmetric
// iterates, which keeps the iteration count small in the solve path.
std::vector<double> pcg_solve(const FluxLinearization& lin, const DiskGrid& grid,
                              const std::vector<double>& rhs,
                              const ModePreconditioner& precond, double rel_tol,
                              int max_iters) {
    const double rhs_norm = std::sqrt(dot(rhs, rhs));
    std::vector<double> x(rhs.size(), 0.0);
    if (rhs_norm == 0.0) return x;

    std::vector<double> r = rhs;
    std::vector<double> z = precond.apply(r);
    std::vector<double> p = z;
    double rz = dot(r, z);

    for (int it = 0; it < max_iters; ++it) {
        std::vector<double> q = apply_netflux_jacobian(lin, p, grid);
        for (double& v : q) v = -v;
        const double pq = dot(p, q);
        if (!(pq > 0.0)) break;
        const double alpha = rz / pq;
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * q[i];
        }
        if (std::sqrt(dot(r, r)) <= rel_tol * rhs_norm) break;
        z = precond.apply(r);
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = z[i] + beta * p[i];
    }
    return x;
}

std::vector<double> residual_from_fluxes(const std::vector<double>& net,
                                         double h_mean, const DiskGrid& grid) {
    std::vector<double> res(net.size());
    for (int i = 0; i < grid.n_rho(); ++i) {
        const double area = grid.cell_area(i);
        for (int j = 0; j < grid.n_theta(); ++j) {
            const int a = grid.index(i, j);
            res[a] = net[a] / area - 2.0 * h_mean;
        }
    }
    return res;
}

} // namespace

std::vector<double> cmc_residual(const HeightField& field, double h_mean,
                                 const DiskGrid& grid) {
    require_matches(field, grid, "cmc_residual");
    const FaceSlopes fs = face_slopes(field.values, field.boundary, grid);
    const std::vector<double> rad = face_fluxes_radial(fs, grid);
    const std::vector<double> ang = face_fluxes_angular(fs, grid);
    return residual_from_fluxes(net_flux(rad, ang, grid), h_mean, grid);
}

double boundary_flux(const HeightField& field, const DiskGrid& grid) {
    require_matches(field, grid, "boundary_flux");
    const FaceSlopes fs = face_slopes(field.values, field.boundary, grid);
    const std::vector<double> rad = face_fluxes_radial(fs, grid);
    double total = 0.0;
    for (int j = 0; j < grid.n_theta(); ++j)
        total += rad[grid.index(grid.n_rho() - 1, j)];
    return total;
}

std::vector<double> jacobian_apply(const HeightField& field,
                                   const std::vector<double>& direction,
                                   double h_mean, const DiskGrid& grid) {
    (void)h_mean;  // the residual is affine in H, so H drops out
    require_matches(field, grid, "jacobian_apply");
    if (direction.size() != static_cast<std::size_t>(grid.interior_count()))
        throw std::invalid_argument("jacobian_apply: direction does not match grid");
    const FaceSlopes fs = face_slopes(field.values, field.boundary, grid);
    const FluxLinearization lin = linearize_fluxes(fs, grid);
    std::vector<double> net = apply_netflux_jacobian(lin, direction, grid);
    return residual_from_fluxes(net, 0.0, grid);
}

double residual_norm(const std::vector<double>& values, const DiskGrid& grid) {
    double acc = 0.0;
    for (int i = 0; i < grid.n_rho(); ++i) {
        const double area = grid.cell_area(i);
        for (int j = 0; j < grid.n_theta(); ++j) {
            const double v = values[grid.index(i, j)];
            acc += v * v * area;
        }
    }
    return std::sqrt(acc / grid.disk_area());
}

SolveResult solve_dirichlet(double r, double h_mean, const SolverConfig& config,
                            const DiskGrid& grid) {
    config.validate();
    if (grid.radius() != r)
        throw std::invalid_argument("solve_dirichlet: grid radius differs from r");
    if (!std::isfinite(h_mean))
        throw std::invalid_argument("solve_dirichlet: H must be finite");
    const double limit = config.h_max_fraction / r;
    if (std::abs(h_mean) > limit)
        throw HOutOfRange(h_mean, limit,
                          "solve_dirichlet: |H| exceeds the solvable window");

    SolveResult result;
    result.h_target = h_mean;
    result.field = HeightField::zero(grid);

    const int stages = h_mean == 0.0 ? 1 : config.continuation_steps;
    bool ok = true;
    double norm = 0.0;

    for (int stage = 1; stage <= stages && ok; ++stage) {
        const double h_stage = h_mean * stage / stages;
        result.continuation_path.push_back(h_stage);
        int stage_iters = 0;

        while (true) {
            std::vector<double> res = cmc_residual(result.field, h_stage, grid);
            norm = residual_norm(res, grid);
            result.residual_history.push_back(norm);
            if (norm <= config.newton_tol) break;
            if (result.total_newton_iters >= config.max_newton_iters) {
                ok = false;
                break;
            }

            const FaceSlopes fs =
                face_slopes(result.field.values, result.field.boundary, grid);
            const FluxLinearization lin = linearize_fluxes(fs, grid);
            const ModePreconditioner precond(lin, grid);

            // Solve -B delta = -(residual * area) i.e. B delta = -a.R
            std::vector<double> rhs(res.size());
            for (int i = 0; i < grid.n_rho(); ++i) {
                const double area = grid.cell_area(i);
                for (int j = 0; j < grid.n_theta(); ++j) {
                    const int a = grid.index(i, j);
                    rhs[a] = res[a] * area;
                }
            }
            const std::vector<double> delta = pcg_solve(
                lin, grid, rhs, precond, config.linear_tol, config.linear_max_iters);

            // Backtracking on the residual norm.
            double t = 1.0;
            bool accepted = false;
            HeightField trial = result.field;
            while (t >= config.min_step) {
                for (std::size_t a = 0; a < trial.values.size(); ++a)
                    trial.values[a] = result.field.values[a] + t * delta[a];
                const double trial_norm =
                    residual_norm(cmc_residual(trial, h_stage, grid), grid);
                if (trial_norm < norm) {
                    result.field.values = trial.values;
                    accepted = true;
                    break;
                }
                t *= config.damping_factor;
            }
            ++result.total_newton_iters;
            ++stage_iters;
            if (!accepted) {
                ok = false;
                break;
            }
        }
        result.stage_iterations.push_back(stage_iters);
    }

    result.final_residual = norm;
    result.converged = ok && norm <= config.newton_tol;
    return result;
}

ErrorNorms error_vs_exact(const SolveResult& result, const CapSpec& spec,
                          const DiskGrid& grid) {
    if (spec.r != grid.radius())
        throw std::invalid_argument("error_vs_exact: spec radius differs from grid");
    if (!result.field.matches(grid))
        throw std::invalid_argument("error_vs_exact: result field does not match grid");
    const CapExactValues exact = cap_exact_values(spec);
    ErrorNorms norms;
    double acc = 0.0;
    for (int i = 0; i < grid.n_rho(); ++i) {
        const double target = exact.height(grid.rho(i));
        const double area = grid.cell_area(i);
        for (int j = 0; j < grid.n_theta(); ++j) {
            const double diff = result.field.values[grid.index(i, j)] - target;
            norms.linf = std::max(norms.linf, std::abs(diff));
            acc += diff * diff * area;
        }
    }
    norms.l2 = std::sqrt(acc / grid.disk_area());
    return norms;
}

} // namespace cmclab
