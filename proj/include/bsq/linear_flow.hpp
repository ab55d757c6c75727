#pragma once

#include "bsq/field.hpp"

namespace bsq {

struct QuadratureSpec {
    enum class Mode { adaptive, upper_bound };
    Mode mode = Mode::adaptive;
    double rel_tol = 1e-6;  // tighter requests can hit the roundoff floor of the norm integrands
    double t_max = -1.0;  // <= 0: use 40 / min(nu, lambda)
};

struct E0F0 {
    double e0 = 0.0;
    double f0 = 0.0;
    double e0_err = 0.0;  // quadrature estimate + analytic tail bound
    double f0_err = 0.0;
    bool converged = true;
};

/// Closed-form solution of the linearized system: Theta(t) = e^{-lambda t}
/// Theta0; U(t) = alpha(t) U0 + beta(t) V0 where V0 is the buoyancy-driven
/// velocity response; W(t) = alpha(t) W0 + beta(t) (vorticity driver).
/// The quadratic products needed for the forcing are precomputed once, so
/// time evaluation involves no transforms.
struct LinearFlow {
    double nu = 1.0;
    double lambda = 1.0;
    SpectralField U0, Theta0;
    SpectralField W0;      // curl of U0
    SpectralField V0;      // (-Lap)^{-1} applied to the vorticity driver's curl source
    SpectralField driver;  // d1 Theta0 (2D) or (d2 Theta0, -d1 Theta0, 0) (3D)

    // static bilinear products: U.grad U = a^2 P1 + ab P2 + b^2 P3,
    // U.grad Theta = e^{-lambda t}(a R + b Q)
    SpectralField P1, P2, P3;
    SpectralField R, Q;

    // H^3 Gram matrices of the products (forcing norms without transforms)
    double gram_uu[3][3] = {};
    double gram_ut[2][2] = {};

    // physical-space caches for the sup norm
    RealField U0_phys, V0_phys;
    double theta0_linf = 0.0;

    double alpha(double t) const;
    /// (e^{-lambda t} - e^{-nu t})/(nu - lambda); the t e^{-nu t} branch is
    /// used when |nu - lambda| < 1e-8 max(nu, lambda) to avoid cancellation.
    double beta(double t) const;

    SpectralField theta_at(double t) const;
    SpectralField velocity_at(double t) const;
    SpectralField vorticity_at(double t) const;

    /// f = -U.grad U (dim components), g = -U.grad Theta (scalar).
    void forcing_at(double t, SpectralField& f, SpectralField& g) const;

    /// ||U.grad U||_{H^3} + ||U.grad Theta||_{H^3} at time t (Gram form).
    double forcing_h3(double t) const;
    /// ||U(t)||_{L^inf} + ||Theta(t)||_{L^inf}.
    double sup_norm(double t) const;

    E0F0 compute_e0_f0(const QuadratureSpec& spec) const;
};

LinearFlow make_linear_flow(const SpectralField& U0, const SpectralField& Theta0,
                            double nu, double lambda);

}  // namespace bsq
