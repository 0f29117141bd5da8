#include "cmclab/exact.hpp"

namespace cmclab {

CapSpec cap_from_H(double r, double h_mean) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw std::invalid_argument("cap_from_H: r must be positive");
    if (!std::isfinite(h_mean))
        throw std::invalid_argument("cap_from_H: H must be finite");
    if (h_mean > 0.0 || h_mean < -1.0 / r)
        throw HOutOfRange(h_mean, 1.0 / r,
                          "cap_from_H: no graph cap with upward normal exists for this H");
    if (h_mean == 0.0) return {r, 0.0, CapBranch::plane};
    if (h_mean == -1.0 / r) return {r, r, CapBranch::hemisphere};
    return {r, 1.0 / std::abs(h_mean), CapBranch::small_cap};
}

HeightField cap_height_field(const CapSpec& spec, const DiskGrid& grid) {
    if (grid.radius() != spec.r)
        throw std::invalid_argument("cap_height_field: grid radius differs from spec");
    if (spec.branch == CapBranch::hemisphere)
        throw std::invalid_argument(
            "cap_height_field: hemisphere gradient is singular at the boundary");

    HeightField f = HeightField::zero(grid);
    if (spec.branch == CapBranch::plane) return f;

    const double rr = spec.sphere_radius;
    const double offset = std::sqrt(rr * rr - spec.r * spec.r);
    for (int i = 0; i < grid.n_rho(); ++i) {
        const double rho = grid.rho(i);
        const double v = std::sqrt(rr * rr - rho * rho) - offset;
        for (int j = 0; j < grid.n_theta(); ++j)
            f.values[grid.index(i, j)] = v;
    }
    return f;
}

CapExactValues cap_exact_values(const CapSpec& spec) {
    CapExactValues v;
    v.r = spec.r;
    v.sphere_radius = spec.sphere_radius;
    v.branch = spec.branch;
    const double pi = std::numbers::pi;
    if (spec.branch == CapBranch::plane) {
        v.h_mean = 0.0;
        v.k_gauss = 0.0;
        v.sigma_sq = 0.0;
        v.conormal_vertical = 0.0;
        v.sigma_nn = 0.0;
        v.area = pi * spec.r * spec.r;
        v.projected_integral = pi * spec.r * spec.r;
        v.flux = 0.0;
        v.cap_height = 0.0;
        return v;
    }
    const double rr = spec.sphere_radius;
    v.h_mean = -1.0 / rr;
    v.k_gauss = 1.0 / (rr * rr);
    v.sigma_sq = 2.0 / (rr * rr);
    v.conormal_vertical = spec.r / rr;
    v.sigma_nn = -1.0 / rr;
    v.area = 2.0 * pi * rr * (rr - std::sqrt(rr * rr - spec.r * spec.r));
    v.projected_integral = pi * spec.r * spec.r;
    v.flux = 2.0 * pi * spec.r * spec.r / rr;
    v.cap_height = rr - std::sqrt(rr * rr - spec.r * spec.r);
    return v;
}

} // namespace cmclab
