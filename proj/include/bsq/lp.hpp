#pragma once

#include <limits>
#include <vector>

#include "bsq/cutoff.hpp"
#include "bsq/field.hpp"

namespace bsq {

enum class BlockKind {
    homogeneous,    // coefficientwise phi(2^{-q} |xi|)
    inhomogeneous,  // q >= 0: same as homogeneous; q = -1: chi(|xi|); q <= -2: zero
    low_pass        // chi(2^{-q} |xi|)
};

/// Littlewood-Paley block of a field.
SpectralField lp_block(const SpectralField& u, int q, BlockKind kind,
                       const DyadicCutoff& c);

/// Smallest and largest q for which the homogeneous block of this grid's
/// lattice can be nonzero (support of phi(2^{-q}|xi|) meets the lattice).
std::pair<int, int> lp_block_range(const GridSpec& g);

struct BesovResult {
    double value = 0.0;
    /// per-shell contributions 2^{qs} ||block||_{L^p}, indexed from q_lo
    std::vector<double> shells;
    int q_lo = 0;
    /// set when the grid's outermost dyadic shell carries > 1e-10 of the norm
    /// (the lattice truncates the dyadic decomposition there)
    bool truncated = false;
};

constexpr double kInfExponent = std::numeric_limits<double>::infinity();

/// Besov norm: l^r over q of 2^{qs} ||block_q u||_{L^p}. Homogeneous sums
/// over all lattice-supported shells, inhomogeneous over q >= -1.
/// p, r in [1, inf]; pass kInfExponent for the sup cases.
BesovResult besov_norm(const SpectralField& u, double s, double p, double r,
                       bool homogeneous, const DyadicCutoff& c);

}  // namespace bsq
