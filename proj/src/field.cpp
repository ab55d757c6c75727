#include "bsq/field.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "bsq/fft.hpp"

namespace bsq {

SpectralField::SpectralField(const GridSpec& g, int ncomp) : grid(g), comps(ncomp) {
    data.assign(ncomp, std::vector<std::complex<double>>(g.points(), {0.0, 0.0}));
}

std::complex<double> SpectralField::coeff(int c, const std::array<int, 3>& k) const {
    const int half = grid.n / 2;
    for (int a = 0; a < grid.dim; ++a)
        if (k[a] < -half || k[a] > half) return {0.0, 0.0};
    return data[c][flatten(k, grid)];
}

void SpectralField::set_zero() {
    for (auto& c : data) std::fill(c.begin(), c.end(), std::complex<double>{0.0, 0.0});
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    for (int c = 0; c < comps; ++c)
        for (std::size_t i = 0; i < data[c].size(); ++i) data[c][i] += o.data[c][i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    for (int c = 0; c < comps; ++c)
        for (std::size_t i = 0; i < data[c].size(); ++i) data[c][i] -= o.data[c][i];
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (auto& c : data)
        for (auto& z : c) z *= s;
    return *this;
}

void SpectralField::axpy(double s, const SpectralField& o) {
    for (int c = 0; c < comps; ++c)
        for (std::size_t i = 0; i < data[c].size(); ++i) data[c][i] += s * o.data[c][i];
}

void SpectralField::axpy(std::complex<double> s, const SpectralField& o) {
    for (int c = 0; c < comps; ++c)
        for (std::size_t i = 0; i < data[c].size(); ++i) data[c][i] += s * o.data[c][i];
}

void SpectralField::symmetrize() {
    const std::size_t npts = grid.points();
    for (int c = 0; c < comps; ++c) {
        for (std::size_t i = 0; i < npts; ++i) {
            auto k = unflatten(i, grid);
            std::array<int, 3> mk{-k[0], -k[1], -k[2]};
            // -n/2 and n/2 alias to the same storage slot
            for (int a = 0; a < grid.dim; ++a)
                if (mk[a] == grid.n / 2 && k[a] == grid.n / 2) mk[a] = k[a];
            std::size_t j = flatten(mk, grid);
            if (j < i) continue;
            auto z = 0.5 * (data[c][i] + std::conj(data[c][j]));
            data[c][i] = z;
            data[c][j] = std::conj(z);
        }
    }
}

double SpectralField::hermitian_defect() const {
    double worst = 0.0;
    const std::size_t npts = grid.points();
    for (int c = 0; c < comps; ++c) {
        for (std::size_t i = 0; i < npts; ++i) {
            auto k = unflatten(i, grid);
            std::array<int, 3> mk{-k[0], -k[1], -k[2]};
            for (int a = 0; a < grid.dim; ++a)
                if (mk[a] == grid.n / 2 && k[a] == grid.n / 2) mk[a] = k[a];
            std::size_t j = flatten(mk, grid);
            worst = std::max(worst, std::abs(data[c][i] - std::conj(data[c][j])));
        }
    }
    return worst;
}

double SpectralField::sum_sq() const {
    double s = 0.0;
    for (const auto& c : data)
        for (const auto& z : c) s += std::norm(z);
    return s;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double s, SpectralField a) { return a *= s; }

RealField::RealField(const GridSpec& g, int ncomp) : grid(g), comps(ncomp) {
    data.assign(ncomp, std::vector<double>(g.points(), 0.0));
}

void RealField::set_zero() {
    for (auto& c : data) std::fill(c.begin(), c.end(), 0.0);
}

SpectralField random_band_limited(const GridSpec& g, int ncomp, double xi_lo,
                                  double xi_hi, std::uint64_t seed) {
    if (!(xi_lo >= 0.0 && xi_hi > xi_lo))
        throw std::invalid_argument("random_band_limited: need 0 <= xi_lo < xi_hi");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    RealField noise(g, ncomp);
    for (int c = 0; c < ncomp; ++c)
        for (auto& x : noise.data[c]) x = gauss(rng);
    SpectralField out = to_spectral(noise);
    const double lo2 = xi_lo * xi_lo, hi2 = xi_hi * xi_hi;
    const std::size_t npts = g.points();
    for (std::size_t i = 0; i < npts; ++i) {
        auto xi = frequency(i, g);
        double r2 = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
        if (r2 < lo2 || r2 > hi2)
            for (int c = 0; c < ncomp; ++c) out.at(c, i) = 0.0;
    }
    out.symmetrize();
    // normalize each component to unit L^2 mass over the box
    const double vol_factor = 1.0 / g.box_volume();
    for (int c = 0; c < ncomp; ++c) {
        double e = 0.0;
        for (const auto& z : out.data[c]) e += std::norm(z);
        e *= vol_factor;  // Parseval: int |u|^2 dx = (2 pi L)^{-d} sum |u_hat|^2
        if (e > 0.0) {
            double s = 1.0 / std::sqrt(e);
            for (auto& z : out.data[c]) z *= s;
        }
    }
    return out;
}

}  // namespace bsq
