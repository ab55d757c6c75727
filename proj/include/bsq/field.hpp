#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "bsq/grid.hpp"

namespace bsq {

/// Multi-component field in spectral representation. Component c stores the
/// full (not half-complex) set of Fourier coefficients u_hat(k) on the signed
/// lattice, row-major with the last axis fastest, normalized so that
/// u_hat(k) approximates the integral of u(x) exp(-i k.x / L) over the box.
struct SpectralField {
    GridSpec grid;
    int comps = 0;
    std::vector<std::vector<std::complex<double>>> data;

    SpectralField() = default;
    SpectralField(const GridSpec& g, int ncomp);

    std::complex<double>& at(int c, std::size_t idx) { return data[c][idx]; }
    const std::complex<double>& at(int c, std::size_t idx) const { return data[c][idx]; }

    /// Coefficient at signed lattice index k (zero for out-of-range k).
    std::complex<double> coeff(int c, const std::array<int, 3>& k) const;

    void set_zero();
    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double s);

    /// this += s * o
    void axpy(double s, const SpectralField& o);
    void axpy(std::complex<double> s, const SpectralField& o);

    /// Enforce u_hat(-k) = conj(u_hat(k)) by averaging the two; makes the
    /// physical-space field exactly real up to roundoff.
    void symmetrize();

    /// max_k |u_hat(k) - conj(u_hat(-k))| over all components.
    double hermitian_defect() const;

    /// sum_k |u_hat(k)|^2 over all components (unnormalized spectral energy).
    double sum_sq() const;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField a);

/// Multi-component field sampled on the physical grid, same layout.
struct RealField {
    GridSpec grid;
    int comps = 0;
    std::vector<std::vector<double>> data;

    RealField() = default;
    RealField(const GridSpec& g, int ncomp);

    double& at(int c, std::size_t idx) { return data[c][idx]; }
    const double& at(int c, std::size_t idx) const { return data[c][idx]; }

    void set_zero();
};

/// Random real field with spectrum supported on the annulus
/// xi_lo <= |k|/L <= xi_hi, unit H^0 mass per component, reproducible
/// from the seed. Used for synthetic test data.
SpectralField random_band_limited(const GridSpec& g, int ncomp, double xi_lo,
                                  double xi_hi, std::uint64_t seed);

}  // namespace bsq
