#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bsq/fft.hpp"
#include "bsq/initial_data.hpp"
#include "bsq/linear_flow.hpp"
#include "bsq/ops.hpp"

using namespace bsq;

namespace {

LinearFlow flow_2d(double nu = 1.0, double lambda = 1.0, double eps = 0.25) {
    DataParams2D p;
    p.eps = eps;
    GridSpec g = grid_for_epsilon(eps, 2);
    LinearData ld = make_linear_data(build_a0_2d(p, g));
    return make_linear_flow(ld.U0, ld.Theta0, nu, lambda);
}

LinearFlow flow_3d(double nu = 1.0, double lambda = 1.0) {
    DataParams3D p;
    p.eps = 0.1;
    GridSpec g;
    g.dim = 3;
    g.scale = 8.0;
    g.n = 72;
    LinearData ld = make_linear_data(build_a0_3d(p, g));
    return make_linear_flow(ld.U0, ld.Theta0, nu, lambda);
}

double max_diff(const SpectralField& a, const SpectralField& b) {
    double worst = 0.0;
    for (int c = 0; c < a.comps; ++c)
        for (std::size_t i = 0; i < a.grid.points(); ++i)
            worst = std::max(worst, std::abs(a.data[c][i] - b.data[c][i]));
    return worst;
}

SpectralField buoyancy(const SpectralField& theta) {
    SpectralField b(theta.grid, theta.grid.dim);
    b.data[theta.grid.dim - 1] = theta.data[0];
    return b;
}

}  // namespace

TEST_CASE("construction rejects bad rates and component counts") {
    GridSpec g;
    g.dim = 2;
    g.scale = 2.0;
    g.n = 24;
    SpectralField u(g, 2), th(g, 1);
    CHECK_THROWS_AS(make_linear_flow(u, th, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_linear_flow(u, th, 1.0, -2.0), std::invalid_argument);
    SpectralField wrong(g, 1);
    CHECK_THROWS_AS(make_linear_flow(wrong, th, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("time zero reproduces the initial data") {
    LinearFlow lf = flow_2d(1.0, 2.0);
    CHECK(lf.alpha(0.0) == 1.0);
    CHECK(lf.beta(0.0) == 0.0);
    CHECK(max_diff(lf.velocity_at(0.0), lf.U0) == 0.0);
    CHECK(max_diff(lf.theta_at(0.0), lf.Theta0) == 0.0);
    CHECK(max_diff(lf.vorticity_at(0.0), curl(lf.U0)) == 0.0);
    SpectralField f, g;
    lf.forcing_at(0.0, f, g);
    SpectralField minus_p1 = advect(lf.U0, lf.U0);
    minus_p1 *= -1.0;
    CHECK(max_diff(f, minus_p1) == 0.0);
    // the perp-gradient construction makes U0 . grad Theta0 vanish, so g(0) = 0
    CHECK(norm_l2(g) <= 1e-12 * norm_l2(lf.Theta0));
}

TEST_CASE("scalar decays at the exact exponential rate") {
    LinearFlow lf = flow_2d(0.7, 1.3);
    const double h3_0 = norm_hm(lf.Theta0, 3);
    for (double t : {0.3, 1.0, 2.7}) {
        double h3 = norm_hm(lf.theta_at(t), 3);
        CHECK(h3 == doctest::Approx(std::exp(-1.3 * t) * h3_0).epsilon(1e-13));
    }
}

TEST_CASE("closed form satisfies the damped equations to second order") {
    for (int dim : {2, 3}) {
        LinearFlow lf = dim == 2 ? flow_2d(0.8, 1.1) : flow_3d(0.8, 1.1);
        const double t0 = 0.5;
        double prev_theta = 0.0, prev_mom = 0.0;
        for (double h : {0.02, 0.01}) {
            // scalar: d/dt Theta + lambda Theta = 0
            SpectralField dth = lf.theta_at(t0 + h) - lf.theta_at(t0 - h);
            dth *= 1.0 / (2.0 * h);
            SpectralField th = lf.theta_at(t0);
            th *= lf.lambda;
            dth += th;
            double res_theta = norm_l2(dth);

            // momentum: d/dt U + nu U = P(Theta e_d)
            SpectralField du = lf.velocity_at(t0 + h) - lf.velocity_at(t0 - h);
            du *= 1.0 / (2.0 * h);
            SpectralField nu_u = lf.velocity_at(t0);
            nu_u *= lf.nu;
            du += nu_u;
            du -= leray_project(buoyancy(lf.theta_at(t0)));
            double res_mom = norm_l2(du);

            if (prev_theta > 0.0) {
                CHECK(prev_theta / res_theta == doctest::Approx(4.0).epsilon(0.1));
                CHECK(prev_mom / res_mom == doctest::Approx(4.0).epsilon(0.1));
            }
            prev_theta = res_theta;
            prev_mom = res_mom;
        }
    }
}

TEST_CASE("beta switches branches without a jump") {
    LinearFlow equal = flow_2d(1.0, 1.0);
    CHECK(equal.beta(2.0) == doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-14));
    LinearFlow near = flow_2d(1.0, 1.0 + 5e-9);   // inside the switch window
    LinearFlow apart = flow_2d(1.0, 1.0 + 1e-6);  // generic branch
    for (double t : {0.1, 1.0, 5.0}) {
        CHECK(near.beta(t) == doctest::Approx(equal.beta(t)).epsilon(1e-7));
        CHECK(apart.beta(t) == doctest::Approx(equal.beta(t)).epsilon(1e-5));
    }
}

TEST_CASE("curl of the velocity solution is the vorticity solution") {
    for (int dim : {2, 3}) {
        LinearFlow lf = dim == 2 ? flow_2d(0.6, 1.7) : flow_3d(0.6, 1.7);
        for (double t : {0.4, 1.9}) {
            SpectralField cu = curl(lf.velocity_at(t));
            SpectralField w = lf.vorticity_at(t);
            CHECK(max_diff(cu, w) <= 1e-12 * norm_linf(w));
        }
    }
}

TEST_CASE("spectral support is invariant under the linear flow") {
    LinearFlow lf = flow_2d();
    SpectralField u = lf.velocity_at(1.3);
    for (std::size_t i = 0; i < u.grid.points(); ++i) {
        auto xi = frequency(i, u.grid);
        double r = std::hypot(xi[0], xi[1]);
        if (r >= 4.0 / 3.0 && r <= 1.5) continue;
        CHECK(std::abs(u.data[0][i]) == 0.0);
        CHECK(std::abs(u.data[1][i]) == 0.0);
    }
}

TEST_CASE("sup norm cache agrees with the transform-based norms") {
    LinearFlow lf = flow_2d(0.9, 1.4);
    for (double t : {0.0, 0.8, 2.2}) {
        double direct = norm_linf(lf.velocity_at(t)) +
                        std::exp(-lf.lambda * t) * norm_linf(lf.Theta0);
        CHECK(lf.sup_norm(t) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("forcing stays anti-parallel to the static scalar product") {
    // with U0 . grad Theta0 = 0 the scalar forcing is -e^{-lambda t} beta(t) Q
    LinearFlow lf = flow_2d(1.2, 0.9);
    for (double t : {0.5, 1.5}) {
        SpectralField f, g;
        lf.forcing_at(t, f, g);
        SpectralField expect = lf.Q;
        expect *= -std::exp(-lf.lambda * t) * lf.beta(t);
        CHECK(max_diff(g, expect) <= 1e-12 * norm_linf(lf.Q));
        double cos = inner_hm(g, lf.Q, 3) / (norm_hm(g, 3) * norm_hm(lf.Q, 3));
        CHECK(cos == doctest::Approx(-1.0).epsilon(1e-12));
    }
}

TEST_CASE("zero scalar data leaves only the self-advection forcing") {
    GridSpec g = grid_for_epsilon(0.25, 2);
    DataParams2D p;
    p.eps = 0.25;
    SpectralField a0 = build_a0_2d(p, g);
    SpectralField zero_theta(g, 1);
    LinearFlow lf = make_linear_flow(perp_gradient(a0), zero_theta, 1.0, 1.0);
    CHECK(norm_l2(lf.V0) == 0.0);
    SpectralField f, gg;
    lf.forcing_at(0.7, f, gg);
    CHECK(norm_l2(gg) == 0.0);
    SpectralField expect = lf.P1;
    expect *= -lf.alpha(0.7) * lf.alpha(0.7);
    CHECK(max_diff(f, expect) <= 1e-13 * norm_linf(lf.P1));
}

TEST_CASE("gram matrices reproduce the transform-based forcing size") {
    for (int dim : {2, 3}) {
        LinearFlow lf = dim == 2 ? flow_2d(1.1, 0.8) : flow_3d(1.1, 0.8);
        for (double t : {0.0, 0.6, 1.7}) {
            SpectralField f, g;
            lf.forcing_at(t, f, g);
            double direct = norm_hm(f, 3) + norm_hm(g, 3);
            CHECK(lf.forcing_h3(t) == doctest::Approx(direct).epsilon(1e-10));
        }
    }
}

TEST_CASE("quadrature lands below the closed-form upper bound") {
    for (int dim : {2, 3}) {
        LinearFlow lf = dim == 2 ? flow_2d(1.0, 1.0) : flow_3d(1.0, 1.0);
        QuadratureSpec adaptive;
        E0F0 a = lf.compute_e0_f0(adaptive);
        QuadratureSpec bound;
        bound.mode = QuadratureSpec::Mode::upper_bound;
        E0F0 b = lf.compute_e0_f0(bound);
        CHECK(a.converged);
        CHECK(a.e0 > 0.0);
        CHECK(a.f0 > 0.0);
        CHECK(a.e0 <= b.e0 * (1 + 1e-10) + a.e0_err);
        CHECK(a.f0 <= b.f0 * (1 + 1e-10) + a.f0_err);
        CHECK(a.e0_err <= 1e-4 * a.e0);
        CHECK(a.f0_err <= 1e-4 * a.f0);
    }
}

TEST_CASE("quadrature value is stable under a longer window") {
    LinearFlow lf = flow_2d(0.5, 2.0);
    QuadratureSpec s40, s60;
    s60.t_max = 120.0;  // default here is 40 / min(nu, lambda) = 80
    E0F0 a = lf.compute_e0_f0(s40);
    E0F0 b = lf.compute_e0_f0(s60);
    CHECK(a.e0 == doctest::Approx(b.e0).epsilon(1e-6));
    CHECK(a.f0 == doctest::Approx(b.f0).epsilon(1e-6));
}

TEST_CASE("an unattainable tolerance is reported, not thrown") {
    LinearFlow lf = flow_2d();
    QuadratureSpec s;
    s.rel_tol = 1e-15;  // below what adaptive refinement can certify
    E0F0 r;
    CHECK_NOTHROW(r = lf.compute_e0_f0(s));
    CHECK_FALSE(r.converged);
}
