#pragma once

#include "bsq/field.hpp"

namespace bsq {

/// Forward transform: physical samples -> Fourier coefficients, scaled by the
/// cell volume so u_hat(k) approximates int u(x) exp(-i (k/L).x) dx.
SpectralField to_spectral(const RealField& u);

/// Inverse transform: coefficients -> physical samples, scaled by the inverse
/// box volume. If max_imag is non-null it receives the largest imaginary
/// residue encountered (should be ~1e-13 for Hermitian-symmetric input).
RealField to_physical(const SpectralField& u, double* max_imag = nullptr);

/// Release all cached FFTW plans (mainly for leak checkers).
void clear_plan_cache();

}  // namespace bsq
