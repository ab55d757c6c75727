#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bsq/fft.hpp"
#include "bsq/initial_data.hpp"
#include "bsq/ops.hpp"

using namespace bsq;

namespace {

bool in_band(double lo, double r, double hi) { return r >= lo && r <= hi; }

}  // namespace

TEST_CASE("amplitude laws at analytically exact points") {
    DataParams2D p2;
    p2.eps = 0.25;  // log2 log2 4 = 1
    CHECK(p2.amplitude() == doctest::Approx(4.0).epsilon(1e-15));

    DataParams3D p3;
    p3.eps = 1.0 / 16.0;  // log2 log2 16 = 2
    p3.p = 2.0;
    CHECK(p3.amplitude() == doctest::Approx(16.0 * std::sqrt(2.0)).epsilon(1e-14));

    // growth as eps shrinks, and in the integrability index
    DataParams2D finer = p2;
    finer.eps = 0.125;
    CHECK(finer.amplitude() > p2.amplitude());
    DataParams3D steeper = p3;
    steeper.p = 4.0;
    CHECK(steeper.amplitude() > p3.amplitude());
}

TEST_CASE("parameter validation rejects out-of-range inputs") {
    DataParams2D p2;
    p2.eps = 0.5;
    CHECK_THROWS_AS(p2.validate(), std::invalid_argument);
    p2.eps = 0.0;
    CHECK_THROWS_AS(p2.validate(), std::invalid_argument);
    p2.eps = 0.25;
    p2.transition_order = 0;
    CHECK_THROWS_AS(p2.validate(), std::invalid_argument);

    DataParams3D p3;
    p3.eps = 0.2;  // support would leave the annulus
    CHECK_THROWS_AS(p3.validate(), std::invalid_argument);
    p3.eps = 0.1;
    p3.p = 1.0;
    CHECK_THROWS_AS(p3.validate(), std::invalid_argument);

    DataParams2D ok;
    ok.eps = 0.25;
    GridSpec coarse;
    coarse.dim = 2;
    coarse.scale = 8.0;  // spacing 1/8 > eps/4
    coarse.n = 72;
    CHECK_THROWS_AS(build_a0_2d(ok, coarse), std::invalid_argument);
    GridSpec g3;
    g3.dim = 3;
    g3.scale = 8.0;
    g3.n = 72;
    CHECK_THROWS_AS(build_a0_2d(ok, g3), std::invalid_argument);
}

TEST_CASE("2D profile is supported in the wedge-annulus and flat on the core") {
    DataParams2D p;
    p.eps = 0.25;
    GridSpec g = grid_for_epsilon(p.eps, 2);
    SpectralField a0 = build_a0_2d(p, g);
    const double amp = p.amplitude();
    int nonzero = 0, flat = 0;
    for (std::size_t i = 0; i < g.points(); ++i) {
        double v = a0.data[0][i].real();
        CHECK(a0.data[0][i].imag() == 0.0);
        auto xi = frequency(i, g);
        double r = std::hypot(xi[0], xi[1]);
        double d = std::abs(xi[0] - xi[1]);
        if (v != 0.0) {
            ++nonzero;
            CHECK(v > 0.0);
            CHECK(v <= amp);
            CHECK(in_band(4.0 / 3.0, r, 1.5));
            CHECK(d <= p.eps);
        }
        if (in_band(25.0 / 18.0, r, 13.0 / 9.0) && d <= p.eps / 2.0) {
            ++flat;
            CHECK(v == amp);  // both factors sit on their flats: exact
        }
    }
    CHECK(nonzero == 22);
    CHECK(flat == 6);
    CHECK(a0.hermitian_defect() == 0.0);
}

TEST_CASE("2D profile is even in xi and symmetric under swapping axes") {
    DataParams2D p;
    p.eps = 0.25;
    GridSpec g = grid_for_epsilon(p.eps, 2);
    SpectralField a0 = build_a0_2d(p, g);
    for (std::size_t i = 0; i < g.points(); ++i) {
        auto k = unflatten(i, g);
        CHECK(a0.coeff(0, {-k[0], -k[1], 0}) == a0.data[0][i]);
        CHECK(a0.coeff(0, {k[1], k[0], 0}) == a0.data[0][i]);
    }
    double residue = 0.0;
    to_physical(a0, &residue);
    CHECK(residue <= 1e-13 * p.amplitude());
}

TEST_CASE("3D profile on the coarse lattice is a small diagonal constellation") {
    DataParams3D p;
    p.eps = 0.1;
    GridSpec g;
    g.dim = 3;
    g.scale = 8.0;
    g.n = 72;
    SpectralField a0 = build_a0_3d(p, g);
    const double amp = p.amplitude();
    int nonzero = 0;
    for (std::size_t i = 0; i < g.points(); ++i) {
        double v = a0.data[0][i].real();
        if (v == 0.0) continue;
        ++nonzero;
        CHECK(v == amp);  // the only carriers are fully flat points
        auto xi = frequency(i, g);
        CHECK(std::abs(std::hypot(xi[0], xi[1]) - std::sqrt(2.0)) <= 1e-12);
        CHECK(xi[0] == xi[1]);
        CHECK(std::abs(std::abs(xi[2]) - 0.125) <= 1e-12);
        CHECK(in_band(4.0 / 3.0, std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]), 1.5));
    }
    CHECK(nonzero == 4);
    CHECK(a0.hermitian_defect() == 0.0);
}

TEST_CASE("3D profile on a refined lattice keeps its support in the annulus") {
    DataParams3D p;
    p.eps = 0.1;
    GridSpec g;
    g.dim = 3;
    g.scale = 16.0;
    g.n = 144;
    SpectralField a0 = build_a0_3d(p, g);
    const double amp = p.amplitude();
    int nonzero = 0, flat = 0;
    for (std::size_t i = 0; i < g.points(); ++i) {
        double v = a0.data[0][i].real();
        if (v == 0.0) continue;
        ++nonzero;
        CHECK(v <= amp * (1 + 1e-15));
        auto xi = frequency(i, g);
        double full = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
        CHECK(in_band(4.0 / 3.0 - 1e-12, full, 1.5 + 1e-12));
        CHECK(std::abs(xi[0] - xi[1]) <= p.eps);
        CHECK(in_band(p.eps, std::abs(xi[2]), 2.0 * p.eps));
        if (v == amp) ++flat;
    }
    CHECK(nonzero >= 24);  // the transition shells pick up lattice points here
    CHECK(flat == 4);      // fully flat carriers stay the diagonal constellation
}

TEST_CASE("3D build reports an unresolved vertical band") {
    DataParams3D p;
    p.eps = 0.05;  // band [0.05, 0.1] misses the xi3 lattice {0, 0.125, ...}
    GridSpec g;
    g.dim = 3;
    g.scale = 8.0;
    g.n = 72;
    CHECK_THROWS_AS(build_a0_3d(p, g), std::invalid_argument);
}

TEST_CASE("linear data: divergence-free velocity that does not advect the scalar") {
    DataParams2D p;
    p.eps = 0.25;
    GridSpec g = grid_for_epsilon(p.eps, 2);
    SpectralField a0 = build_a0_2d(p, g);
    LinearData ld = make_linear_data(a0);

    CHECK(ld.U0.comps == 2);
    CHECK(norm_l2(divergence(ld.U0)) <= 1e-14 * norm_l2(ld.U0));
    // U0 . grad Theta0 = perp-grad(a0) . grad(a0) = 0 pointwise
    SpectralField adv = advect(ld.U0, ld.Theta0);
    CHECK(norm_linf(adv) <= 1e-12 * norm_linf(ld.U0) * norm_linf(gradient(ld.Theta0)));
    // vorticity of the perp-gradient is minus the laplacian of the stream profile
    SpectralField w = curl(ld.U0);
    SpectralField lap = derivative(a0, {2, 0, 0}) + derivative(a0, {0, 2, 0});
    double worst = 0.0, amp = 0.0;
    for (std::size_t i = 0; i < g.points(); ++i) {
        worst = std::max(worst, std::abs(w.data[0][i] + lap.data[0][i]));
        amp = std::max(amp, std::abs(w.data[0][i]));
    }
    CHECK(worst <= 1e-13 * amp);
}

TEST_CASE("sup norm equals the scaled coefficient mass for nonnegative profiles") {
    // all Fourier coefficients real >= 0, so the max sits at x = 0 and the
    // physical sup norm is exactly (2 pi)^{-d} times the Fourier-L1 norm
    DataParams2D p;
    p.eps = 0.25;
    GridSpec g = grid_for_epsilon(p.eps, 2);
    SpectralField a0 = build_a0_2d(p, g);
    double ratio = norm_linf(a0) * std::pow(2.0 * M_PI, 2) / norm_fourier_l1(a0);
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("coefficient mass tracks the double-log law across eps") {
    // ||a0_hat||_{L1} ~ sqrt(log2 log2 1/eps): the normalized values stay
    // within a factor-two band while eps drops fourfold
    double normalized[3];
    int idx = 0;
    for (double eps : {0.4, 0.2, 0.1}) {
        DataParams2D p;
        p.eps = eps;
        GridSpec g = grid_for_epsilon(eps, 2);
        SpectralField a0 = build_a0_2d(p, g);
        normalized[idx++] = norm_fourier_l1(a0) / std::sqrt(std::log2(std::log2(1.0 / eps)));
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(normalized[i] <= 2.0 * normalized[j]);
            CHECK(normalized[j] <= 2.0 * normalized[i]);
        }
}

TEST_CASE("largeness report: frozen values at eps = 1/4 and growth in eps") {
    DataParams2D p;
    p.eps = 0.25;
    GridSpec g = grid_for_epsilon(p.eps, 2);
    LinearData ld = make_linear_data(build_a0_2d(p, g));
    auto rows = largeness_report(ld.U0, ld.Theta0);
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].label == "u0_linf");
    CHECK(rows[1].label == "theta0_linf");
    CHECK(rows[2].label == "u0_lp");
    CHECK(rows[3].label == "u0_h3");
    CHECK(rows[4].label == "theta0_h3");
    CHECK(rows[5].label == "a0hat_l1");
    CHECK(rows[6].label == "u0_besov_0_p_1");
    CHECK(rows[7].label == "u0_besov_3_2_2");
    for (const auto& row : rows) CHECK(row.value > 0.0);

    CHECK(rows[1].value == doctest::Approx(0.00651289122299217).epsilon(1e-10));
    CHECK(rows[3].value == doctest::Approx(0.6659598817471).epsilon(1e-10));
    CHECK(rows[4].value == doctest::Approx(0.468836541912979).epsilon(1e-10));
    CHECK(rows[5].value == doctest::Approx(0.257118639513039).epsilon(1e-10));

    // H3 dominates L2 on the annulus
    CHECK(rows[3].value > norm_l2(ld.U0));

    double prev = 0.0;
    for (double eps : {0.4, 0.2, 0.1}) {
        DataParams2D q;
        q.eps = eps;
        GridSpec gg = grid_for_epsilon(eps, 2);
        SpectralField a = build_a0_2d(q, gg);
        double linf = norm_linf(a);
        CHECK(linf > prev);
        prev = linf;
    }
}

TEST_CASE("3D norm oracle on the coarse lattice") {
    DataParams3D p;
    p.eps = 0.1;
    GridSpec g;
    g.dim = 3;
    g.scale = 8.0;
    g.n = 72;
    SpectralField a0 = build_a0_3d(p, g);
    CHECK(norm_hm(a0, 3) == doctest::Approx(0.234662600995508).epsilon(1e-10));
    LinearData ld = make_linear_data(a0);
    CHECK(ld.U0.comps == 3);
    CHECK(norm_l2(divergence(ld.U0)) <= 1e-14 * (norm_l2(ld.U0) + 1e-300));
}
