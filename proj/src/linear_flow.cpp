#include "bsq/linear_flow.hpp"

#include <cmath>
#include <stdexcept>

#include "bsq/fft.hpp"
#include "bsq/ops.hpp"
#include "bsq/quadrature.hpp"

namespace bsq {

double LinearFlow::alpha(double t) const { return std::exp(-nu * t); }

double LinearFlow::beta(double t) const {
    const double gap = nu - lambda;
    if (std::abs(gap) < 1e-8 * std::max(nu, lambda)) return t * std::exp(-nu * t);
    return (std::exp(-lambda * t) - std::exp(-nu * t)) / gap;
}

SpectralField LinearFlow::theta_at(double t) const {
    SpectralField out = Theta0;
    out *= std::exp(-lambda * t);
    return out;
}

SpectralField LinearFlow::velocity_at(double t) const {
    SpectralField out = U0;
    out *= alpha(t);
    out.axpy(beta(t), V0);
    return out;
}

SpectralField LinearFlow::vorticity_at(double t) const {
    SpectralField out = W0;
    out *= alpha(t);
    out.axpy(beta(t), driver);
    return out;
}

void LinearFlow::forcing_at(double t, SpectralField& f, SpectralField& g) const {
    const double a = alpha(t), b = beta(t);
    f = SpectralField(U0.grid, U0.grid.dim);
    f.axpy(-a * a, P1);
    f.axpy(-a * b, P2);
    f.axpy(-b * b, P3);
    g = SpectralField(U0.grid, 1);
    const double decay = std::exp(-lambda * t);
    g.axpy(-decay * a, R);
    g.axpy(-decay * b, Q);
}

double LinearFlow::forcing_h3(double t) const {
    const double a = alpha(t), b = beta(t);
    const double c[3] = {a * a, a * b, b * b};
    double quad = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) quad += c[i] * gram_uu[i][j] * c[j];
    const double c2[2] = {a, b};
    double quad2 = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) quad2 += c2[i] * gram_ut[i][j] * c2[j];
    return std::sqrt(std::max(quad, 0.0)) +
           std::exp(-lambda * t) * std::sqrt(std::max(quad2, 0.0));
}

double LinearFlow::sup_norm(double t) const {
    const double a = alpha(t), b = beta(t);
    const std::size_t npts = U0.grid.points();
    const int d = U0.grid.dim;
    double best = 0.0;
    for (std::size_t i = 0; i < npts; ++i) {
        double m2 = 0.0;
        for (int c = 0; c < d; ++c) {
            double x = a * U0_phys.data[c][i] + b * V0_phys.data[c][i];
            m2 += x * x;
        }
        best = std::max(best, m2);
    }
    return std::sqrt(best) + std::exp(-lambda * t) * theta0_linf;
}

E0F0 LinearFlow::compute_e0_f0(const QuadratureSpec& spec) const {
    E0F0 out;
    const double rate = std::min(nu, lambda);
    if (spec.mode == QuadratureSpec::Mode::upper_bound) {
        // triangle inequality + exact integrals of the coefficient products:
        // int a^2 = 1/(2nu); int ab = 1/(2nu(nu+lambda));
        // int b^2 = 1/(2 nu lambda (nu+lambda)); int a e^{-lambda t} = 1/(nu+lambda);
        // int b e^{-lambda t} = 1/(2 lambda (nu+lambda)); int a = 1/nu;
        // int b = 1/(nu lambda); int e^{-lambda t} = 1/lambda.
        const double s = nu + lambda;
        out.e0 = std::sqrt(gram_uu[0][0]) / (2.0 * nu) +
                 std::sqrt(gram_uu[1][1]) / (2.0 * nu * s) +
                 std::sqrt(gram_uu[2][2]) / (2.0 * nu * lambda * s) +
                 std::sqrt(gram_ut[0][0]) / s +
                 std::sqrt(gram_ut[1][1]) / (2.0 * lambda * s);
        out.f0 = norm_linf(U0_phys) / nu + norm_linf(V0_phys) / (nu * lambda) +
                 theta0_linf / lambda;
        return out;
    }
    const double t_max = spec.t_max > 0.0 ? spec.t_max : 40.0 / rate;
    auto e_integrand = [this](double t) { return forcing_h3(t); };
    auto f_integrand = [this](double t) { return sup_norm(t); };
    QuadResult qe = integrate_adaptive(e_integrand, 0.0, t_max, 0.0, spec.rel_tol);
    QuadResult qf = integrate_adaptive(f_integrand, 0.0, t_max, 0.0, spec.rel_tol);
    // both integrands decay at least like e^{-rate(t - t_max)} beyond t_max
    // (the polynomial factor of the nu = lambda branch is dominated over
    // [t_max, inf) because t_max = O(40/rate)); fold the tail into the error.
    const double tail_e = forcing_h3(t_max) / rate * 1.05;
    const double tail_f = sup_norm(t_max) / rate * 1.05;
    out.e0 = qe.value;
    out.f0 = qf.value;
    out.e0_err = qe.abserr + tail_e;
    out.f0_err = qf.abserr + tail_f;
    out.converged = qe.converged && qf.converged;
    return out;
}

LinearFlow make_linear_flow(const SpectralField& U0, const SpectralField& Theta0,
                            double nu, double lambda) {
    if (!(nu > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("make_linear_flow: nu, lambda must be positive");
    if (U0.comps != U0.grid.dim || Theta0.comps != 1)
        throw std::invalid_argument("make_linear_flow: component mismatch");
    LinearFlow lf;
    lf.nu = nu;
    lf.lambda = lambda;
    lf.U0 = U0;
    lf.Theta0 = Theta0;
    lf.W0 = curl(U0);
    const int d = U0.grid.dim;
    double dropped = 0.0;
    if (d == 2) {
        lf.driver = partial(Theta0, 0);
        lf.V0 = inverse_laplacian(perp_gradient(lf.driver), &dropped);
    } else {
        lf.driver = perp_gradient(Theta0);  // (d2, -d1, 0) applied to Theta0
        // V0 = (-Lap)^{-1} (d1 d3, d2 d3, -(d1^2 + d2^2)) Theta0
        SpectralField src(U0.grid, 3);
        const std::size_t npts = U0.grid.points();
        for (std::size_t i = 0; i < npts; ++i) {
            auto xi = frequency(i, U0.grid);
            std::complex<double> th = Theta0.data[0][i];
            src.data[0][i] = -xi[0] * xi[2] * th;  // (i xi1)(i xi3)
            src.data[1][i] = -xi[1] * xi[2] * th;
            src.data[2][i] = (xi[0] * xi[0] + xi[1] * xi[1]) * th;  // -(d1^2+d2^2)
        }
        lf.V0 = inverse_laplacian(src, &dropped);
    }
    lf.P1 = advect(U0, U0);
    SpectralField p2 = advect(U0, lf.V0);
    p2 += advect(lf.V0, U0);
    lf.P2 = p2;
    lf.P3 = advect(lf.V0, lf.V0);
    lf.R = advect(U0, Theta0);
    lf.Q = advect(lf.V0, Theta0);
    const SpectralField* pu[3] = {&lf.P1, &lf.P2, &lf.P3};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) lf.gram_uu[i][j] = inner_hm(*pu[i], *pu[j], 3);
    const SpectralField* pt[2] = {&lf.R, &lf.Q};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) lf.gram_ut[i][j] = inner_hm(*pt[i], *pt[j], 3);
    lf.U0_phys = to_physical(U0);
    lf.V0_phys = to_physical(lf.V0);
    lf.theta0_linf = norm_linf(Theta0);
    return lf;
}

}  // namespace bsq
