#pragma once

#include "bsq/field.hpp"

namespace bsq {

/// D^beta: multiply coefficients by (i xi)^beta, xi = k/L. |beta| <= 4.
SpectralField derivative(const SpectralField& f, const std::array<int, 3>& beta);

/// Single partial derivative along axis a (0-based).
SpectralField partial(const SpectralField& f, int axis);

/// Gradient of component c of a scalar field: d components.
SpectralField gradient(const SpectralField& f, int c = 0);

/// d = 2: (d2 a, -d1 a). d = 3: (d2 a, -d1 a, 0). The divergence-free
/// velocity profile attached to a scalar stream-like function a.
SpectralField perp_gradient(const SpectralField& a);

/// Divergence of a d-component field (scalar output).
SpectralField divergence(const SpectralField& u);

/// d = 2: scalar d1 u2 - d2 u1. d = 3: the usual 3-component curl.
SpectralField curl(const SpectralField& u);

/// Divide coefficients by |xi|^2 and negate (symbol of (-Laplace)^{-1}).
/// The zero mode is annihilated; its magnitude (relative to the field's
/// spectral mass) is reported through `dropped` when non-null, otherwise a
/// relative magnitude above 1e-10 throws std::domain_error.
SpectralField inverse_laplacian(const SpectralField& f, double* dropped = nullptr);

/// Leray projection: u_hat -> u_hat - xi (xi . u_hat)/|xi|^2. Zero mode kept.
SpectralField leray_project(const SpectralField& u);

/// Velocity with curl W and zero divergence: (-Laplace)^{-1} applied to
/// perp_gradient(W) in 2D (W scalar) or curl(W) in 3D (W vector).
SpectralField velocity_from_vorticity(const SpectralField& w);

/// Zero all coefficients with |k| >= dealias_fraction * n/2 (strict mask:
/// the Nyquist ring is always removed, even at fraction 1).
void dealias(SpectralField& f);

/// Dealiased pseudo-spectral u . grad w, componentwise in w.
/// u must have grid.dim components.
SpectralField advect(const SpectralField& u, const SpectralField& w);

/// Pointwise product of two single-component fields, computed in physical
/// space. Not dealiased: intended for band-limited inputs whose product
/// still fits the grid (commutator tests and similar exact expansions).
SpectralField multiply(const SpectralField& a, const SpectralField& b);

/// L^p norm by physical-space quadrature; |u(x)| is the Euclidean magnitude
/// across components. p = inf is handled by norm_linf.
double norm_lp(const RealField& u, double p);
double norm_lp(const SpectralField& u, double p);
double norm_linf(const RealField& u);
double norm_linf(const SpectralField& u);

/// sqrt of sum over multi-indices |beta| <= m of ||D^beta u||_{L^2}^2,
/// evaluated spectrally with the polynomial weight
/// w_m(xi) = sum_{|beta|<=m} prod_i xi_i^{2 beta_i}. m <= 4.
double norm_hm(const SpectralField& u, int m);

/// L^2 norm via Parseval (w_0 weight).
double norm_l2(const SpectralField& u);

/// sum_k |u_hat(k)| / L^d: Riemann sum for the integral of |u_hat| in xi.
double norm_fourier_l1(const SpectralField& u);

/// Sobolev pairing sum_{|beta|<=m} int D^beta a_ca . D^beta b_cb dx between
/// single components, evaluated spectrally.
double inner_hm(const SpectralField& a, int ca, const SpectralField& b, int cb, int m);

/// Full-field Sobolev pairing: sum over matched components (a.comps == b.comps).
double inner_hm(const SpectralField& a, const SpectralField& b, int m);

/// The weight w_m(xi) described at norm_hm.
double sobolev_weight(const std::array<double, 3>& xi, int m, int dim);

}  // namespace bsq
