#include "bsq/ops.hpp"

#include <cmath>
#include <stdexcept>

#include "bsq/fft.hpp"

namespace bsq {

namespace {

int abs_order(const std::array<int, 3>& beta) { return beta[0] + beta[1] + beta[2]; }

// d/dx_axis of one component, as a 1-component field
SpectralField partial_component(const SpectralField& f, int c, int axis) {
    SpectralField out(f.grid, 1);
    const std::size_t npts = f.grid.points();
    for (std::size_t i = 0; i < npts; ++i) {
        auto xi = frequency(i, f.grid);
        out.data[0][i] = std::complex<double>(0.0, xi[axis]) * f.data[c][i];
    }
    return out;
}

// (i xi)^beta as a complex scalar
std::complex<double> symbol(const std::array<double, 3>& xi, const std::array<int, 3>& beta) {
    double mag = 1.0;
    int order = 0;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < beta[a]; ++b) mag *= xi[a];
        order += beta[a];
    }
    switch (order % 4) {  // i^order
        case 0: return {mag, 0.0};
        case 1: return {0.0, mag};
        case 2: return {-mag, 0.0};
        default: return {0.0, -mag};
    }
}

}  // namespace

SpectralField derivative(const SpectralField& f, const std::array<int, 3>& beta) {
    if (abs_order(beta) > 4) throw std::invalid_argument("derivative: |beta| <= 4 supported");
    for (int a = f.grid.dim; a < 3; ++a)
        if (beta[a] != 0) throw std::invalid_argument("derivative: beta exceeds dimension");
    SpectralField out(f.grid, f.comps);
    const std::size_t npts = f.grid.points();
    for (std::size_t i = 0; i < npts; ++i) {
        auto s = symbol(frequency(i, f.grid), beta);
        for (int c = 0; c < f.comps; ++c) out.data[c][i] = s * f.data[c][i];
    }
    return out;
}

SpectralField partial(const SpectralField& f, int axis) {
    std::array<int, 3> beta{0, 0, 0};
    beta[axis] = 1;
    return derivative(f, beta);
}

SpectralField gradient(const SpectralField& f, int c) {
    SpectralField out(f.grid, f.grid.dim);
    const std::size_t npts = f.grid.points();
    for (std::size_t i = 0; i < npts; ++i) {
        auto xi = frequency(i, f.grid);
        for (int a = 0; a < f.grid.dim; ++a)
            out.data[a][i] = std::complex<double>(0.0, xi[a]) * f.data[c][i];
    }
    return out;
}

SpectralField perp_gradient(const SpectralField& a) {
    const int d = a.grid.dim;
    SpectralField out(a.grid, d);
    const std::size_t npts = a.grid.points();
    for (std::size_t i = 0; i < npts; ++i) {
        auto xi = frequency(i, a.grid);
        out.data[0][i] = std::complex<double>(0.0, xi[1]) * a.data[0][i];
        out.data[1][i] = std::complex<double>(0.0, -xi[0]) * a.data[0][i];
        // third component stays zero in 3D
    }
    return out;
}

SpectralField divergence(const SpectralField& u) {
    SpectralField out(u.grid, 1);
    const std::size_t npts = u.grid.points();
    for (std::size_t i = 0; i < npts; ++i) {
        auto xi = frequency(i, u.grid);
        std::complex<double> s{0.0, 0.0};
        for (int a = 0; a < u.grid.dim; ++a)
            s += std::complex<double>(0.0, xi[a]) * u.data[a][i];
        out.data[0][i] = s;
    }
    return out;
}

SpectralField curl(const SpectralField& u) {
    const std::size_t npts = u.grid.points();
    if (u.grid.dim == 2) {
        SpectralField out(u.grid, 1);
        for (std::size_t i = 0; i < npts; ++i) {
            auto xi = frequency(i, u.grid);
            out.data[0][i] = std::complex<double>(0.0, xi[0]) * u.data[1][i] -
                             std::complex<double>(0.0, xi[1]) * u.data[0][i];
        }
        return out;
    }
    SpectralField out(u.grid, 3);
    for (std::size_t i = 0; i < npts; ++i) {
        auto xi = frequency(i, u.grid);
        std::complex<double> i1{0.0, xi[0]}, i2{0.0, xi[1]}, i3{0.0, xi[2]};
        out.data[0][i] = i2 * u.data[2][i] - i3 * u.data[1][i];
        out.data[1][i] = i3 * u.data[0][i] - i1 * u.data[2][i];
        out.data[2][i] = i1 * u.data[1][i] - i2 * u.data[0][i];
    }
    return out;
}

SpectralField inverse_laplacian(const SpectralField& f, double* dropped) {
    SpectralField out(f.grid, f.comps);
    const std::size_t npts = f.grid.points();
    double zero_mass = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
        auto xi = frequency(i, f.grid);
        double r2 = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
        if (r2 == 0.0) {
            for (int c = 0; c < f.comps; ++c) zero_mass += std::norm(f.data[c][i]);
            continue;
        }
        for (int c = 0; c < f.comps; ++c) out.data[c][i] = f.data[c][i] / r2;
    }
    double total = f.sum_sq();
    double rel = total > 0.0 ? std::sqrt(zero_mass / total) : 0.0;
    if (dropped)
        *dropped = rel;
    else if (rel > 1e-10)
        throw std::domain_error("inverse_laplacian: field has a significant mean");
    return out;
}

SpectralField leray_project(const SpectralField& u) {
    const int d = u.grid.dim;
    SpectralField out(u.grid, d);
    const std::size_t npts = u.grid.points();
    for (std::size_t i = 0; i < npts; ++i) {
        auto xi = frequency(i, u.grid);
        double r2 = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
        if (r2 == 0.0) {
            for (int a = 0; a < d; ++a) out.data[a][i] = u.data[a][i];
            continue;
        }
        std::complex<double> dot{0.0, 0.0};
        for (int a = 0; a < d; ++a) dot += xi[a] * u.data[a][i];
        dot /= r2;
        for (int a = 0; a < d; ++a) out.data[a][i] = u.data[a][i] - xi[a] * dot;
    }
    return out;
}

SpectralField velocity_from_vorticity(const SpectralField& w) {
    SpectralField driver = w.grid.dim == 2 ? perp_gradient(w) : curl(w);
    double dropped = 0.0;
    return inverse_laplacian(driver, &dropped);
}

void dealias(SpectralField& f) {
    const double kmax = f.grid.dealias_fraction * f.grid.n / 2.0;
    const double cut2 = kmax * kmax;
    const std::size_t npts = f.grid.points();
    for (std::size_t i = 0; i < npts; ++i) {
        if (static_cast<double>(lattice_norm2(i, f.grid)) >= cut2)
            for (int c = 0; c < f.comps; ++c) f.data[c][i] = 0.0;
    }
}

SpectralField advect(const SpectralField& u, const SpectralField& w) {
    const int d = u.grid.dim;
    if (u.comps != d) throw std::invalid_argument("advect: u must have dim components");
    const std::size_t npts = u.grid.points();
    RealField up = to_physical(u);
    RealField acc(u.grid, w.comps);
    for (int c = 0; c < w.comps; ++c) {
        for (int a = 0; a < d; ++a) {
            RealField dw = to_physical(partial_component(w, c, a));
            for (std::size_t i = 0; i < npts; ++i)
                acc.data[c][i] += up.data[a][i] * dw.data[0][i];
        }
    }
    SpectralField out = to_spectral(acc);
    dealias(out);
    return out;
}

SpectralField multiply(const SpectralField& a, const SpectralField& b) {
    if (a.comps != 1 || b.comps != 1)
        throw std::invalid_argument("multiply: single-component fields only");
    RealField ap = to_physical(a), bp = to_physical(b);
    RealField prod(a.grid, 1);
    const std::size_t npts = a.grid.points();
    for (std::size_t i = 0; i < npts; ++i) prod.data[0][i] = ap.data[0][i] * bp.data[0][i];
    return to_spectral(prod);
}

double norm_lp(const RealField& u, double p) {
    if (p < 1.0) throw std::invalid_argument("norm_lp: p must be >= 1");
    if (std::isinf(p)) return norm_linf(u);
    const std::size_t npts = u.grid.points();
    double s = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
        double m2 = 0.0;
        for (int c = 0; c < u.comps; ++c) m2 += u.data[c][i] * u.data[c][i];
        s += std::pow(m2, p / 2.0);
    }
    return std::pow(s * u.grid.cell_volume(), 1.0 / p);
}

double norm_lp(const SpectralField& u, double p) { return norm_lp(to_physical(u), p); }

double norm_linf(const RealField& u) {
    const std::size_t npts = u.grid.points();
    double best = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
        double m2 = 0.0;
        for (int c = 0; c < u.comps; ++c) m2 += u.data[c][i] * u.data[c][i];
        best = std::max(best, m2);
    }
    return std::sqrt(best);
}

double norm_linf(const SpectralField& u) { return norm_linf(to_physical(u)); }

double sobolev_weight(const std::array<double, 3>& xi, int m, int dim) {
    // sum over all multi-indices |beta| <= m of xi^{2 beta}
    double w = 0.0;
    double p0 = 1.0;
    for (int b0 = 0; b0 <= m; ++b0) {
        if (dim == 2) {
            double p1 = 1.0;
            for (int b1 = 0; b0 + b1 <= m; ++b1) {
                w += p0 * p1;
                p1 *= xi[1] * xi[1];
            }
        } else {
            double p1 = 1.0;
            for (int b1 = 0; b0 + b1 <= m; ++b1) {
                double p2 = 1.0;
                for (int b2 = 0; b0 + b1 + b2 <= m; ++b2) {
                    w += p0 * p1 * p2;
                    p2 *= xi[2] * xi[2];
                }
                p1 *= xi[1] * xi[1];
            }
        }
        p0 *= xi[0] * xi[0];
    }
    return w;
}

double norm_hm(const SpectralField& u, int m) {
    if (m < 0 || m > 4) throw std::invalid_argument("norm_hm: m in [0,4]");
    const std::size_t npts = u.grid.points();
    double s = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
        double mass = 0.0;
        for (int c = 0; c < u.comps; ++c) mass += std::norm(u.data[c][i]);
        if (mass > 0.0) s += sobolev_weight(frequency(i, u.grid), m, u.grid.dim) * mass;
    }
    return std::sqrt(s / u.grid.box_volume());
}

double norm_l2(const SpectralField& u) { return std::sqrt(u.sum_sq() / u.grid.box_volume()); }

double norm_fourier_l1(const SpectralField& u) {
    const std::size_t npts = u.grid.points();
    double s = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
        double m2 = 0.0;
        for (int c = 0; c < u.comps; ++c) m2 += std::norm(u.data[c][i]);
        s += std::sqrt(m2);
    }
    return s * std::pow(u.grid.scale, -u.grid.dim);
}

double inner_hm(const SpectralField& a, int ca, const SpectralField& b, int cb, int m) {
    const std::size_t npts = a.grid.points();
    double s = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
        double re = (a.data[ca][i] * std::conj(b.data[cb][i])).real();
        if (re != 0.0) s += sobolev_weight(frequency(i, a.grid), m, a.grid.dim) * re;
    }
    return s / a.grid.box_volume();
}

double inner_hm(const SpectralField& a, const SpectralField& b, int m) {
    double s = 0.0;
    for (int c = 0; c < a.comps; ++c) s += inner_hm(a, c, b, c, m);
    return s;
}

}  // namespace bsq
