#include "bsq/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace bsq {
namespace {

// Plan creation is not thread-safe; execution via fftw_execute_dft on
// distinct buffers is. Plans are cached per (dim, n, sign) and created with
// FFTW_UNALIGNED so they can run on any heap buffer.
std::mutex plan_mutex;
std::map<std::tuple<int, int, int>, fftw_plan> plan_cache;

fftw_plan get_plan(int dim, int n, int sign) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(dim, n, sign);
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;
    std::vector<int> dims(dim, n);
    std::size_t npts = 1;
    for (int a = 0; a < dim; ++a) npts *= static_cast<std::size_t>(n);
    std::vector<fftw_complex> scratch(npts);
    fftw_plan p = fftw_plan_dft(dim, dims.data(), scratch.data(), scratch.data(), sign,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
    plan_cache[key] = p;
    return p;
}

}  // namespace

SpectralField to_spectral(const RealField& u) {
    SpectralField out(u.grid, u.comps);
    const std::size_t npts = u.grid.points();
    fftw_plan p = get_plan(u.grid.dim, u.grid.n, FFTW_FORWARD);
    const double w = u.grid.cell_volume();
    std::vector<std::complex<double>> buf(npts);
    for (int c = 0; c < u.comps; ++c) {
        for (std::size_t i = 0; i < npts; ++i) buf[i] = {u.data[c][i], 0.0};
        fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(buf.data()),
                         reinterpret_cast<fftw_complex*>(buf.data()));
        for (std::size_t i = 0; i < npts; ++i) out.data[c][i] = w * buf[i];
    }
    return out;
}

RealField to_physical(const SpectralField& u, double* max_imag) {
    RealField out(u.grid, u.comps);
    const std::size_t npts = u.grid.points();
    fftw_plan p = get_plan(u.grid.dim, u.grid.n, FFTW_BACKWARD);
    const double w = 1.0 / u.grid.box_volume();
    double worst = 0.0;
    std::vector<std::complex<double>> buf(npts);
    for (int c = 0; c < u.comps; ++c) {
        for (std::size_t i = 0; i < npts; ++i) buf[i] = u.data[c][i];
        fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(buf.data()),
                         reinterpret_cast<fftw_complex*>(buf.data()));
        for (std::size_t i = 0; i < npts; ++i) {
            out.data[c][i] = w * buf[i].real();
            worst = std::max(worst, std::abs(w * buf[i].imag()));
        }
    }
    if (max_imag) *max_imag = worst;
    return out;
}

void clear_plan_cache() {
    std::lock_guard<std::mutex> lock(plan_mutex);
    for (auto& [key, p] : plan_cache) fftw_destroy_plan(p);
    plan_cache.clear();
}

}  // namespace bsq
