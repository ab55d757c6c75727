#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace bsq {

/// Periodic box discretization. The box has side 2*pi*scale, so the
/// frequency lattice is {k/scale : k integer, |k_i| <= n/2}. A single
/// (n, scale) pair is used for every axis.
struct GridSpec {
    int dim = 2;                      // spatial dimension, 2 or 3
    double scale = 16.0;              // L; box side 2*pi*L, lattice spacing 1/L
    int n = 144;                      // points per axis, even
    double dealias_fraction = 2.0 / 3.0;

    std::size_t points() const;       // n^dim
    double spacing() const;           // 2*pi*scale / n
    double cell_volume() const;       // spacing^dim
    double box_volume() const;        // (2*pi*scale)^dim
    double max_frequency() const { return n / (2.0 * scale); }
    double dealias_radius() const { return dealias_fraction * max_frequency(); }

    /// Throws std::invalid_argument unless n is even, n >= 8, scale > 0,
    /// dealias_fraction in (0, 1] and max_frequency() >= 4 (the lattice must
    /// cover the annulus 4/3 <= |xi| <= 3/2 plus several dyadic shells).
    void validate() const;

    bool operator==(const GridSpec&) const = default;
};

/// Signed lattice index for axis position i in [0, n): 0,1,...,n/2,-n/2+1,...,-1.
inline int signed_index(int i, int n) { return i <= n / 2 ? i : i - n; }

/// Decompose a flat row-major index into per-axis signed lattice indices.
/// Axis d-1 varies fastest (FFTW layout).
std::array<int, 3> unflatten(std::size_t idx, const GridSpec& g);

/// Flat index for per-axis signed lattice indices (each in [-n/2, n/2]).
std::size_t flatten(const std::array<int, 3>& k, const GridSpec& g);

/// Frequency vector xi = k / scale for a flat index.
std::array<double, 3> frequency(std::size_t idx, const GridSpec& g);

/// Squared integer lattice norm |k|^2 for a flat index.
std::int64_t lattice_norm2(std::size_t idx, const GridSpec& g);

/// Grid sized for wedge data of half-width eps: scale = ceil(4/eps) * widen,
/// n = 9 * scale. With that choice the dealias ball has radius 3, so
/// quadratic products of fields supported in |xi| <= 3/2 are captured exactly.
GridSpec grid_for_epsilon(double eps, int dim, int widen = 1);

}  // namespace bsq
