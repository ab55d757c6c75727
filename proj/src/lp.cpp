#include "bsq/lp.hpp"

#include <algorithm>
#include <cmath>

#include "bsq/ops.hpp"

namespace bsq {

SpectralField lp_block(const SpectralField& u, int q, BlockKind kind,
                       const DyadicCutoff& c) {
    SpectralField out(u.grid, u.comps);
    if (kind == BlockKind::inhomogeneous && q <= -2) return out;
    const double inv = std::ldexp(1.0, -q);  // 2^{-q}
    const std::size_t npts = u.grid.points();
    for (std::size_t i = 0; i < npts; ++i) {
        auto xi = frequency(i, u.grid);
        double r = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
        double w;
        if (kind == BlockKind::low_pass)
            w = c.chi(r * inv);
        else if (kind == BlockKind::inhomogeneous && q == -1)
            w = c.chi(r);
        else
            w = c.phi(r * inv);
        if (w == 0.0) continue;
        for (int comp = 0; comp < u.comps; ++comp) out.data[comp][i] = w * u.data[comp][i];
    }
    return out;
}

std::pair<int, int> lp_block_range(const GridSpec& g) {
    const double xi_min = 1.0 / g.scale;
    const double xi_max = std::sqrt(static_cast<double>(g.dim)) * g.max_frequency();
    // phi(2^{-q} xi) has support 3/4 <= 2^{-q} xi <= 8/3
    int q_lo = static_cast<int>(std::floor(std::log2(3.0 * xi_min / 8.0)));
    int q_hi = static_cast<int>(std::ceil(std::log2(4.0 * xi_max / 3.0)));
    return {q_lo, q_hi};
}

BesovResult besov_norm(const SpectralField& u, double s, double p, double r,
                       bool homogeneous, const DyadicCutoff& c) {
    auto [q_lo, q_hi] = lp_block_range(u.grid);
    if (!homogeneous) q_lo = -1;
    BesovResult res;
    res.q_lo = q_lo;
    const double xi_rep = u.grid.max_frequency();
    double edge_mass = 0.0;
    for (int q = q_lo; q <= q_hi; ++q) {
        SpectralField blk = lp_block(u, q, homogeneous ? BlockKind::homogeneous
                                                       : BlockKind::inhomogeneous, c);
        double lp = std::isinf(p) ? norm_linf(blk) : norm_lp(blk, p);
        double term = std::pow(2.0, q * s) * lp;
        res.shells.push_back(term);
        if ((8.0 / 3.0) * std::ldexp(1.0, q) > xi_rep) edge_mass = std::max(edge_mass, term);
    }
    if (std::isinf(r)) {
        for (double t : res.shells) res.value = std::max(res.value, t);
    } else {
        double acc = 0.0;
        for (double t : res.shells) acc += std::pow(t, r);
        res.value = std::pow(acc, 1.0 / r);
    }
    if (res.value > 0.0 && edge_mass > 1e-10 * res.value) res.truncated = true;
    return res;
}

}  // namespace bsq
