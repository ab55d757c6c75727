#pragma once

#include <string>
#include <vector>

#include "bsq/field.hpp"

namespace bsq {

/// 2D Fourier-bump parameters. The profile a0_hat is supported in the
/// wedge-annulus {|xi1 - xi2| <= eps, 4/3 <= |xi| <= 3/2} and equals the
/// amplitude on the smaller flat set {|xi1 - xi2| <= eps/2,
/// 25/18 <= |xi| <= 13/9}. Amplitude law: (1/eps) sqrt(log2 log2 1/eps).
struct DataParams2D {
    double eps = 0.25;
    int transition_order = 1;

    double amplitude() const;
    /// Throws std::invalid_argument unless eps in (0, 1/2) (the amplitude
    /// law needs log2(1/eps) > 1).
    void validate() const;
};

/// 3D variant: horizontal annulus 41/30 <= |xi_h| <= 22/15 (flat
/// [25/18, 13/9]), same wedge in (xi1, xi2), vertical band |xi3| in
/// [eps, 2 eps] (flat [5 eps/4, 7 eps/4]). Amplitude law:
/// eps^{-2(p-1)/p} sqrt(log2 log2 1/eps).
struct DataParams3D {
    double eps = 0.1;
    double p = 2.0;
    int transition_order = 1;

    double amplitude() const;
    /// eps in (0, 0.15] keeps the support inside 4/3 <= |xi| <= 3/2;
    /// p in (1, inf).
    void validate() const;
};

/// Scalar profile with a0_hat(|xi|-set) as above: real, nonnegative, even in
/// xi, hence a0 is real and even in x. Grid must resolve the wedge
/// (spacing 1/L <= eps/4) in 2D; in 3D a coarse grid is accepted as long as
/// some lattice point carries amplitude (the vertical band is O(eps) thin).
SpectralField build_a0_2d(const DataParams2D& params, const GridSpec& grid);
SpectralField build_a0_3d(const DataParams3D& params, const GridSpec& grid);

struct LinearData {
    SpectralField U0;      // perp-gradient of a0: divergence-free by construction
    SpectralField Theta0;  // a0 itself
};

/// (U0, Theta0) = (perp_grad a0, a0); U0 . grad Theta0 vanishes identically.
LinearData make_linear_data(const SpectralField& a0);

struct LargenessRow {
    std::string label;
    double value;
};

/// Norm table for the built data: `L^inf`, L^p, H^3, Fourier-L1, Besov entries.
std::vector<LargenessRow> largeness_report(const SpectralField& u0,
                                           const SpectralField& theta0, double p = 2.0);

}  // namespace bsq
