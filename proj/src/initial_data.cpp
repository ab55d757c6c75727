#include "bsq/initial_data.hpp"

#include <cmath>
#include <stdexcept>

#include "bsq/cutoff.hpp"
#include "bsq/lp.hpp"
#include "bsq/ops.hpp"

namespace bsq {

namespace {

double loglog2(double eps) { return std::log2(std::log2(1.0 / eps)); }

// Flat-topped bump on [lo, hi], == 1 on [flat_lo, flat_hi], 0 outside.
double plateau(double r, double lo, double flat_lo, double flat_hi, double hi, int order) {
    if (r <= lo || r >= hi) return 0.0;
    if (r >= flat_lo && r <= flat_hi) return 1.0;
    if (r < flat_lo) return smoothstep((r - lo) / (flat_lo - lo), order);
    return 1.0 - smoothstep((r - flat_hi) / (hi - flat_hi), order);
}

// Wedge factor in (xi1, xi2): 1 for |xi1-xi2| <= eps/2, 0 beyond eps.
double wedge(double d, double eps, int order) {
    double a = std::abs(d);
    if (a <= eps / 2.0) return 1.0;
    if (a >= eps) return 0.0;
    return 1.0 - smoothstep((a - eps / 2.0) / (eps / 2.0), order);
}

}  // namespace

double DataParams2D::amplitude() const { return std::sqrt(loglog2(eps)) / eps; }

void DataParams2D::validate() const {
    if (!(eps > 0.0) || !(eps < 0.5))
        throw std::invalid_argument("DataParams2D: eps must lie in (0, 1/2)");
    if (transition_order < 1)
        throw std::invalid_argument("DataParams2D: transition_order >= 1");
}

double DataParams3D::amplitude() const {
    return std::pow(eps, -2.0 * (p - 1.0) / p) * std::sqrt(loglog2(eps));
}

void DataParams3D::validate() const {
    if (!(eps > 0.0) || eps > 0.15)
        throw std::invalid_argument("DataParams3D: eps must lie in (0, 0.15]");
    if (!(p > 1.0) || std::isinf(p))
        throw std::invalid_argument("DataParams3D: p must lie in (1, inf)");
    if (transition_order < 1)
        throw std::invalid_argument("DataParams3D: transition_order >= 1");
    // support containment in the annulus 4/3 <= |xi| <= 3/2
    double outer = std::sqrt(std::pow(22.0 / 15.0, 2) + 4.0 * eps * eps);
    if (outer > 1.5 + 1e-12)
        throw std::invalid_argument("DataParams3D: support would leave |xi| <= 3/2");
}

SpectralField build_a0_2d(const DataParams2D& params, const GridSpec& grid) {
    params.validate();
    grid.validate();
    if (grid.dim != 2) throw std::invalid_argument("build_a0_2d: grid must be 2D");
    if (1.0 / grid.scale > params.eps / 4.0)
        throw std::invalid_argument("build_a0_2d: lattice spacing 1/L exceeds eps/4");
    const double amp = params.amplitude();
    const int order = params.transition_order;
    SpectralField a0(grid, 1);
    const std::size_t npts = grid.points();
    for (std::size_t i = 0; i < npts; ++i) {
        auto xi = frequency(i, grid);
        double r = std::hypot(xi[0], xi[1]);
        double radial = plateau(r, 4.0 / 3.0, 25.0 / 18.0, 13.0 / 9.0, 1.5, order);
        if (radial == 0.0) continue;
        double w = wedge(xi[0] - xi[1], params.eps, order);
        if (w == 0.0) continue;
        a0.data[0][i] = amp * radial * w;
    }
    return a0;
}

SpectralField build_a0_3d(const DataParams3D& params, const GridSpec& grid) {
    params.validate();
    grid.validate();
    if (grid.dim != 3) throw std::invalid_argument("build_a0_3d: grid must be 3D");
    const double amp = params.amplitude();
    const double eps = params.eps;
    const int order = params.transition_order;
    SpectralField a0(grid, 1);
    const std::size_t npts = grid.points();
    bool any = false;
    for (std::size_t i = 0; i < npts; ++i) {
        auto xi = frequency(i, grid);
        double rh = std::hypot(xi[0], xi[1]);
        double radial = plateau(rh, 41.0 / 30.0, 25.0 / 18.0, 13.0 / 9.0, 22.0 / 15.0, order);
        if (radial == 0.0) continue;
        double w = wedge(xi[0] - xi[1], eps, order);
        if (w == 0.0) continue;
        double vert = plateau(std::abs(xi[2]), eps, 1.25 * eps, 1.75 * eps, 2.0 * eps, order);
        if (vert == 0.0) continue;
        a0.data[0][i] = amp * radial * w * vert;
        any = true;
    }
    if (!any)
        throw std::invalid_argument(
            "build_a0_3d: no lattice point carries amplitude; refine the grid");
    return a0;
}

LinearData make_linear_data(const SpectralField& a0) {
    LinearData out;
    out.U0 = perp_gradient(a0);
    out.Theta0 = a0;
    return out;
}

std::vector<LargenessRow> largeness_report(const SpectralField& u0,
                                           const SpectralField& theta0, double p) {
    DyadicCutoff c = build_cutoff();
    std::vector<LargenessRow> rows;
    rows.push_back({"u0_linf", norm_linf(u0)});
    rows.push_back({"theta0_linf", norm_linf(theta0)});
    rows.push_back({"u0_lp", norm_lp(u0, p)});
    rows.push_back({"u0_h3", norm_hm(u0, 3)});
    rows.push_back({"theta0_h3", norm_hm(theta0, 3)});
    rows.push_back({"a0hat_l1", norm_fourier_l1(theta0)});
    rows.push_back({"u0_besov_0_p_1", besov_norm(u0, 0.0, p, 1.0, false, c).value});
    rows.push_back({"u0_besov_3_2_2", besov_norm(u0, 3.0, 2.0, 2.0, false, c).value});
    return rows;
}

}  // namespace bsq
