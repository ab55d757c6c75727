#include "bsq/sim.hpp"

#include <cmath>
#include <stdexcept>

#include "bsq/fft.hpp"
#include "bsq/ops.hpp"

namespace bsq {

void SimConfig::validate() const {
    if (!(nu >= 0.0) || !(lambda >= 0.0))
        throw std::invalid_argument("SimConfig: nu, lambda must be nonnegative");
    if (!(cfl > 0.0) || cfl >= 1.0)
        throw std::invalid_argument("SimConfig: cfl must lie in (0,1)");
    if (!(t_end > 0.0)) throw std::invalid_argument("SimConfig: t_end must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be positive");
    if (stride < 1) throw std::invalid_argument("SimConfig: stride >= 1");
}

namespace {

// buoyancy contribution: theta on the vertical (last) velocity component
void add_buoyancy(SpectralField& acc, const SpectralField& theta) {
    const int d = acc.grid.dim;
    for (std::size_t i = 0; i < acc.data[d - 1].size(); ++i)
        acc.data[d - 1][i] += theta.data[0][i];
}

// nonlinear + coupling part of the tendency (no damping); the integrating
// factor handles the damping exactly.
Tendency nonlinear_part(const SimState& s, const SimConfig& cfg, const LinearFlow* flow) {
    Tendency out;
    if (cfg.mode == SimConfig::Mode::full) {
        SpectralField du = advect(s.u, s.u);
        du *= -1.0;
        add_buoyancy(du, s.theta);
        out.du = leray_project(du);
        out.dtheta = advect(s.u, s.theta);
        out.dtheta *= -1.0;
        return out;
    }
    if (!flow) throw std::invalid_argument("step: perturbation mode needs a LinearFlow");
    SpectralField U = flow->velocity_at(s.t);
    SpectralField Theta = flow->theta_at(s.t);
    SpectralField f, g;
    flow->forcing_at(s.t, f, g);
    SpectralField du = advect(s.u, s.u);
    du += advect(U, s.u);
    du += advect(s.u, U);
    du *= -1.0;
    du += f;
    add_buoyancy(du, s.theta);
    out.du = leray_project(du);
    SpectralField dtheta = advect(s.u, s.theta);
    dtheta += advect(U, s.theta);
    dtheta += advect(s.u, Theta);
    dtheta *= -1.0;
    dtheta += g;
    out.dtheta = dtheta;
    return out;
}

void damp(Tendency& t, const SimState& s, const SimConfig& cfg) {
    t.du.axpy(-cfg.nu, s.u);
    t.dtheta.axpy(-cfg.lambda, s.theta);
}

double max_speed(const SimState& s, const SimConfig& cfg, const LinearFlow* flow) {
    double m = norm_linf(s.u);
    if (cfg.mode == SimConfig::Mode::perturbation && flow) {
        // advecting field is v + U; bound |U(t)| by scanning the caches
        const double a = flow->alpha(s.t), b = flow->beta(s.t);
        double best = 0.0;
        const std::size_t npts = flow->U0_phys.grid.points();
        for (std::size_t i = 0; i < npts; ++i) {
            double m2 = 0.0;
            for (int c = 0; c < flow->U0_phys.comps; ++c) {
                double x = a * flow->U0_phys.data[c][i] + b * flow->V0_phys.data[c][i];
                m2 += x * x;
            }
            best = std::max(best, m2);
        }
        m += std::sqrt(best);
    }
    return m;
}

void scale_comps(SpectralField& u, double s) { u *= s; }

}  // namespace

Tendency rhs_full(const SimState& s, const SimConfig& cfg) {
    Tendency t = nonlinear_part(s, cfg, nullptr);
    damp(t, s, cfg);
    return t;
}

Tendency rhs_perturbation(const SimState& s, const SimConfig& cfg, const LinearFlow& flow) {
    Tendency t = nonlinear_part(s, cfg, &flow);
    damp(t, s, cfg);
    return t;
}

StepOutcome step(SimState& s, double dt, const SimConfig& cfg, const LinearFlow* flow) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
    const double speed = max_speed(s, cfg, flow);
    if (speed > 0.0) {
        const double bound = cfg.cfl * s.u.grid.spacing() / speed;
        if (dt > bound) return {false, bound};
    }
    // integrating-factor RK4: with y' = N(y,t) - D y, D = diag(nu, lambda),
    // advance z = e^{Dt} y by classical RK4. E = e^{-D dt/2} per half step.
    const double eu = std::exp(-cfg.nu * dt / 2.0), et = std::exp(-cfg.lambda * dt / 2.0);
    const double h = dt;
    const SimState y0 = s;

    Tendency k1 = nonlinear_part(y0, cfg, flow);

    SimState y2 = y0;
    y2.u.axpy(h / 2.0, k1.du);
    y2.theta.axpy(h / 2.0, k1.dtheta);
    scale_comps(y2.u, eu);
    scale_comps(y2.theta, et);
    y2.t = y0.t + h / 2.0;
    Tendency k2 = nonlinear_part(y2, cfg, flow);

    SimState y3 = y0;
    scale_comps(y3.u, eu);
    scale_comps(y3.theta, et);
    y3.u.axpy(h / 2.0, k2.du);
    y3.theta.axpy(h / 2.0, k2.dtheta);
    y3.t = y0.t + h / 2.0;
    Tendency k3 = nonlinear_part(y3, cfg, flow);

    SimState y4 = y0;
    scale_comps(y4.u, eu * eu);
    scale_comps(y4.theta, et * et);
    y4.u.axpy(h * eu, k3.du);
    y4.theta.axpy(h * et, k3.dtheta);
    y4.t = y0.t + h;
    Tendency k4 = nonlinear_part(y4, cfg, flow);

    s.u = y0.u;
    s.theta = y0.theta;
    scale_comps(s.u, eu * eu);
    scale_comps(s.theta, et * et);
    s.u.axpy(h / 6.0 * eu * eu, k1.du);
    s.u.axpy(h / 3.0 * eu, k2.du);
    s.u.axpy(h / 3.0 * eu, k3.du);
    s.u.axpy(h / 6.0, k4.du);
    s.theta.axpy(h / 6.0 * et * et, k1.dtheta);
    s.theta.axpy(h / 3.0 * et, k2.dtheta);
    s.theta.axpy(h / 3.0 * et, k3.dtheta);
    s.theta.axpy(h / 6.0, k4.dtheta);
    s.t = y0.t + h;
    s.u = leray_project(s.u);  // counter roundoff drift of the divergence
    return {true, 0.0};
}

RunResult run(const SimConfig& cfg, SimState initial, const std::vector<Observer>& observers,
              const LinearFlow* flow) {
    cfg.validate();
    RunResult res;
    SimState& s = initial;
    const double init_mass = norm_hm(s.u, 3) + norm_hm(s.theta, 3);
    const double guard = cfg.blowup_factor * std::max(init_mass, 1.0);

    auto sample = [&](const SimState& st) {
        TimeSample ts{st.t, norm_hm(st.u, 3), norm_hm(st.theta, 3)};
        res.series.push_back(ts);
        for (const auto& ob : observers) ob(st);
        return ts;
    };

    TimeSample ts = sample(s);
    long steps = 0;
    while (s.t < cfg.t_end - 1e-12 * cfg.t_end) {
        double dt = std::min(cfg.dt, cfg.t_end - s.t);
        StepOutcome oc = step(s, dt, cfg, flow);
        if (!oc.accepted) {
            res.flags.cfl_shrunk = true;
            dt = oc.suggested_dt;
            oc = step(s, dt, cfg, flow);
            if (!oc.accepted) break;  // state unchanged; give up rather than loop
        }
        ++steps;
        const bool due = steps % cfg.stride == 0 || s.t >= cfg.t_end - 1e-12 * cfg.t_end;
        if (due) {
            ts = sample(s);
            if (std::isnan(ts.u_h3) || std::isnan(ts.theta_h3)) {
                res.flags.nan = true;
                break;
            }
            if (ts.u_h3 + ts.theta_h3 > guard) {
                res.flags.blowup = true;
                break;
            }
        }
    }
    res.flags.t_stop = s.t;
    res.final_state = std::move(initial);
    return res;
}

}  // namespace bsq
