#include "bsq/cutoff.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace bsq {

namespace {

double bump(double t, int order) {
    if (t <= 0.0) return 0.0;
    return std::exp(-1.0 / std::pow(t, order));
}

}  // namespace

double smoothstep(double t, int order) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double a = bump(t, order);
    double b = bump(1.0 - t, order);
    if (a == 0.0) return 0.0;  // underflow far into the left flat
    if (b == 0.0) return 1.0;
    return a / (a + b);
}

double DyadicCutoff::chi(double r) const {
    constexpr double lo = 3.0 / 4.0, hi = 4.0 / 3.0;
    if (r <= lo) return 1.0;
    if (r >= hi) return 0.0;
    return 1.0 - smoothstep((r - lo) / (hi - lo), order);
}

DyadicCutoff build_cutoff(int transition_order) {
    if (transition_order < 1)
        throw std::invalid_argument("build_cutoff: transition_order >= 1");
    return DyadicCutoff{transition_order};
}

void write_cutoff_csv(std::ostream& os, const DyadicCutoff& c, double r_max, int samples) {
    os << "r,chi,phi\n";
    for (int i = 0; i <= samples; ++i) {
        double r = r_max * i / samples;
        os << r << ',' << c.chi(r) << ',' << c.phi(r) << '\n';
    }
}

}  // namespace bsq
