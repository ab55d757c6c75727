#pragma once

#include <iosfwd>

#include "bsq/field.hpp"

namespace bsq {

/// C^inf ramp: exactly 0 for t <= 0, exactly 1 for t >= 1, strictly
/// increasing in between. Built from B(t) = exp(-1/t^order); higher order
/// steepens the ramp near the endpoints. The underflow of B near 0 makes
/// the flats machine-exact slightly inside the nominal endpoints as well.
double smoothstep(double t, int order = 1);

/// Radial dyadic cutoff pair. chi == 1 on |xi| <= 3/4, supported in
/// |xi| <= 4/3; phi(xi) = chi(xi/2) - chi(xi) is supported in
/// [3/4, 8/3] and == 1 on [4/3, 3/2]. The telescoping definition makes
/// chi(xi) + sum_{q>=0} phi(2^{-q} xi) = 1 identically.
struct DyadicCutoff {
    int order = 1;

    double chi(double r) const;
    double phi(double r) const { return chi(r / 2.0) - chi(r); }
};

/// order >= 1 controls the smoothstep used in the transition band.
DyadicCutoff build_cutoff(int transition_order = 1);

/// Sampled profile table (CSV: |xi|, chi, phi) on [0, r_max].
void write_cutoff_csv(std::ostream& os, const DyadicCutoff& c, double r_max = 4.0,
                      int samples = 400);

}  // namespace bsq
