#include "bsq/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bsq {

std::size_t GridSpec::points() const {
    std::size_t p = 1;
    for (int a = 0; a < dim; ++a) p *= static_cast<std::size_t>(n);
    return p;
}

double GridSpec::spacing() const { return 2.0 * M_PI * scale / n; }

double GridSpec::cell_volume() const { return std::pow(spacing(), dim); }

double GridSpec::box_volume() const { return std::pow(2.0 * M_PI * scale, dim); }

void GridSpec::validate() const {
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("GridSpec: dim must be 2 or 3, got " + std::to_string(dim));
    if (n < 8 || n % 2 != 0)
        throw std::invalid_argument("GridSpec: n must be even and >= 8, got " + std::to_string(n));
    if (!(scale > 0.0))
        throw std::invalid_argument("GridSpec: scale must be positive");
    if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
        throw std::invalid_argument("GridSpec: dealias_fraction must lie in (0, 1]");
    if (max_frequency() < 4.0)
        throw std::invalid_argument("GridSpec: max frequency n/(2*scale) must be >= 4");
}

std::array<int, 3> unflatten(std::size_t idx, const GridSpec& g) {
    std::array<int, 3> k{0, 0, 0};
    const int n = g.n;
    for (int a = g.dim - 1; a >= 0; --a) {
        k[a] = signed_index(static_cast<int>(idx % n), n);
        idx /= n;
    }
    return k;
}

std::size_t flatten(const std::array<int, 3>& k, const GridSpec& g) {
    const int n = g.n;
    std::size_t idx = 0;
    for (int a = 0; a < g.dim; ++a) {
        int i = k[a] < 0 ? k[a] + n : k[a];
        idx = idx * n + static_cast<std::size_t>(i);
    }
    return idx;
}

std::array<double, 3> frequency(std::size_t idx, const GridSpec& g) {
    auto k = unflatten(idx, g);
    return {k[0] / g.scale, k[1] / g.scale, k[2] / g.scale};
}

std::int64_t lattice_norm2(std::size_t idx, const GridSpec& g) {
    auto k = unflatten(idx, g);
    std::int64_t s = 0;
    for (int a = 0; a < g.dim; ++a) s += static_cast<std::int64_t>(k[a]) * k[a];
    return s;
}

GridSpec grid_for_epsilon(double eps, int dim, int widen) {
    if (!(eps > 0.0)) throw std::invalid_argument("grid_for_epsilon: eps must be positive");
    if (widen < 1) throw std::invalid_argument("grid_for_epsilon: widen must be >= 1");
    GridSpec g;
    g.dim = dim;
    g.scale = std::ceil(4.0 / eps) * widen;
    g.n = static_cast<int>(9 * g.scale);
    if (g.n % 2 != 0) ++g.n;
    g.validate();
    return g;
}

}  // namespace bsq
