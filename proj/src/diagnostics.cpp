#include "bsq/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "bsq/ops.hpp"

namespace bsq {

double choose_sigma(double nu, double lambda, double c_abs) {
    if (!(nu > 0.0) || !(lambda > 0.0) || !(c_abs > 0.0))
        throw std::invalid_argument("choose_sigma: inputs must be positive");
    const double m = std::min(nu, lambda);
    const double cap = m * m / (4.0 * c_abs * c_abs);
    return std::exp2(std::floor(std::log2(cap)));
}

std::pair<double, double> energy_functionals(const SpectralField& v,
                                             const SpectralField& theta, double sigma,
                                             double nu, double lambda) {
    const double v2 = std::pow(norm_hm(v, 3), 2);
    const double t2 = std::pow(norm_hm(theta, 3), 2);
    return {sigma * v2 + t2, sigma * nu * v2 + lambda * t2};
}

ConditionReport condition_lhs(double v0_h3, double theta0_h3, double e0, double f0,
                              const ConditionParams& params) {
    auto lhs_at = [&](double c) {
        return (v0_h3 * v0_h3 + theta0_h3 * theta0_h3 + e0) *
               std::exp(c * f0 + c * e0);
    };
    ConditionReport rep;
    rep.lhs = lhs_at(params.C);
    rep.satisfied = rep.lhs <= params.delta;
    for (double c : {1.0, 2.0, 4.0, 8.0}) rep.lhs_over_c.emplace_back(c, lhs_at(c));
    return rep;
}

MonitorVerdict bootstrap_monitor(const std::vector<std::pair<double, double>>& a_series,
                                 double eta) {
    for (std::size_t i = 0; i < a_series.size(); ++i) {
        if (a_series[i].second > eta) return {true, a_series[i].first, i};
    }
    return {};
}

namespace {

// multi-indices with lo <= |beta| <= hi over the first dim axes
std::vector<std::array<int, 3>> multi_indices(int dim, int lo, int hi) {
    std::vector<std::array<int, 3>> out;
    for (int b0 = 0; b0 <= hi; ++b0)
        for (int b1 = 0; b0 + b1 <= hi; ++b1) {
            if (dim == 2) {
                int s = b0 + b1;
                if (s >= lo && s <= hi) out.push_back({b0, b1, 0});
            } else {
                for (int b2 = 0; b0 + b1 + b2 <= hi; ++b2) {
                    int s = b0 + b1 + b2;
                    if (s >= lo && s <= hi) out.push_back({b0, b1, b2});
                }
            }
        }
    return out;
}

double inner_l2(const SpectralField& a, const SpectralField& b) { return inner_hm(a, b, 0); }

}  // namespace

IdentityTerms energy_identity_check(const SimState& prev, const SimState& mid,
                                    const SimState& next, double sigma,
                                    const SimConfig& cfg, const LinearFlow& flow) {
    const double dt = (next.t - prev.t) / 2.0;
    if (!(dt > 0.0) || std::abs(mid.t - 0.5 * (prev.t + next.t)) > 1e-9 * dt)
        throw std::invalid_argument("energy_identity_check: snapshots must be centered");
    const int d = mid.u.grid.dim;
    const SpectralField& v = mid.u;
    const SpectralField& th = mid.theta;

    IdentityTerms out;
    const auto [a_prev, b_prev] = energy_functionals(prev.u, prev.theta, sigma, cfg.nu, cfg.lambda);
    const auto [a_next, b_next] = energy_functionals(next.u, next.theta, sigma, cfg.nu, cfg.lambda);
    const auto [a_mid, b_mid] = energy_functionals(v, th, sigma, cfg.nu, cfg.lambda);
    (void)a_mid;
    const double coupling = sigma * inner_hm(th, 0, v, d - 1, 3);
    out.lhs = 0.5 * (a_next - a_prev) / (2.0 * dt) + b_mid - coupling;

    SpectralField U = flow.velocity_at(mid.t);
    SpectralField Theta = flow.theta_at(mid.t);
    SpectralField f, g;
    flow.forcing_at(mid.t, f, g);

    // I1: commutators of the self-transport, 0 < |beta| <= 3
    const SpectralField adv_vv = advect(v, v);
    const SpectralField adv_vth = advect(v, th);
    for (const auto& beta : multi_indices(d, 1, 3)) {
        SpectralField dv = derivative(v, beta);
        SpectralField comm = derivative(adv_vv, beta);
        comm -= advect(v, dv);
        out.i1 -= sigma * inner_l2(comm, dv);
        SpectralField dth = derivative(th, beta);
        SpectralField comm_t = derivative(adv_vth, beta);
        comm_t -= advect(v, dth);
        out.i1 -= inner_l2(comm_t, dth);
    }

    // I2: background transport, 0 < |beta| <= 3 (H^3 pairing minus L^2 part)
    const SpectralField adv_Uv = advect(U, v);
    const SpectralField adv_Uth = advect(U, th);
    out.i2 = -sigma * (inner_hm(adv_Uv, v, 3) - inner_l2(adv_Uv, v)) -
             (inner_hm(adv_Uth, th, 3) - inner_l2(adv_Uth, th));

    // I3: perturbation across the background gradient, |beta| <= 3
    const SpectralField adv_vU = advect(v, U);
    const SpectralField adv_vTheta = advect(v, Theta);
    out.i3 = -sigma * inner_hm(adv_vU, v, 3) - inner_hm(adv_vTheta, th, 3);

    // I4: forcing
    out.i4 = sigma * inner_hm(f, v, 3) + inner_hm(g, th, 3);

    out.rhs = out.i1 + out.i2 + out.i3 + out.i4;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

CommutatorResult commutator_check(const SpectralField& g, const SpectralField& f, int m) {
    if (g.comps != 1 || f.comps != 1)
        throw std::invalid_argument("commutator_check: single-component fields only");
    const SpectralField gf = multiply(g, f);
    CommutatorResult res;
    for (const auto& alpha : multi_indices(g.grid.dim, 0, m)) {
        SpectralField comm = derivative(gf, alpha);
        comm -= multiply(g, derivative(f, alpha));
        res.lhs += norm_l2(comm);
    }
    res.bracket = norm_hm(f, m - 1) * norm_linf(gradient(g)) +
                  norm_linf(f) * norm_hm(g, m);
    res.ratio = res.bracket > 0.0 ? res.lhs / res.bracket : 0.0;
    return res;
}

DecayFit decay_fit(const std::vector<std::pair<double, double>>& series, double t_lo,
                   double t_hi) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [t, val] : series)
        if (t >= t_lo && t <= t_hi && val > 0.0) pts.emplace_back(t, std::log(val));
    DecayFit fit;
    if (pts.size() < 2) return fit;
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    for (const auto& [t, y] : pts) {
        st += t;
        sy += y;
        stt += t * t;
        sty += t * y;
    }
    const double n = static_cast<double>(pts.size());
    const double denom = n * stt - st * st;
    if (denom <= 0.0) return fit;
    const double slope = (n * sty - st * sy) / denom;
    const double intercept = (sy - slope * st) / n;
    double ss = 0.0;
    for (const auto& [t, y] : pts) ss += std::pow(y - (slope * t + intercept), 2);
    fit.rate = -slope;
    fit.residual = std::sqrt(ss / n);
    fit.ok = true;
    return fit;
}

EnergyReport make_energy_report(const RunResult& run, double sigma, double nu,
                                double lambda, double eta, double cond_lhs,
                                double fit_t_lo, double fit_t_hi) {
    EnergyReport rep;
    rep.sigma = sigma;
    rep.eta = eta;
    rep.condition_lhs = cond_lhs;
    rep.flags = run.flags;
    std::vector<std::pair<double, double>> a_series;
    for (const auto& s : run.series) {
        EnergySample es;
        es.t = s.t;
        es.v_h3 = s.u_h3;
        es.theta_h3 = s.theta_h3;
        es.a = sigma * s.u_h3 * s.u_h3 + s.theta_h3 * s.theta_h3;
        es.b = sigma * nu * s.u_h3 * s.u_h3 + lambda * s.theta_h3 * s.theta_h3;
        rep.series.push_back(es);
        a_series.emplace_back(es.t, es.a);
    }
    rep.monitor = bootstrap_monitor(a_series, eta);
    rep.decay = decay_fit(a_series, fit_t_lo, fit_t_hi);
    return rep;
}

void write_csv(std::ostream& os, const EnergyReport& report) {
    os << "t, v_h3, theta_h3, A, B\n";
    os.precision(15);
    for (const auto& s : report.series)
        os << s.t << ", " << s.v_h3 << ", " << s.theta_h3 << ", " << s.a << ", " << s.b
           << '\n';
}

}  // namespace bsq
