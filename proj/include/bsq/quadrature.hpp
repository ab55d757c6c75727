#pragma once

#include <functional>

namespace bsq {

struct QuadResult {
    double value = 0.0;
    double abserr = 0.0;
    bool converged = true;
};

/// Adaptive Gauss-Kronrod (15-point) integration of f on [a, b].
/// Falls back to reporting converged = false with the achieved error
/// estimate instead of throwing when the tolerance cannot be met.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, double rel_tol);

}  // namespace bsq
