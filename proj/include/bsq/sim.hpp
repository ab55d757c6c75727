#pragma once

#include <functional>
#include <vector>

#include "bsq/linear_flow.hpp"

namespace bsq {

struct SimConfig {
    enum class Mode { full, perturbation };
    Mode mode = Mode::full;
    double nu = 1.0;
    double lambda = 1.0;
    double cfl = 0.4;
    double dt = 0.01;  // requested step; run() shrinks it at the CFL bound
    double t_end = 1.0;
    int stride = 10;   // observer/sample cadence in steps
    double blowup_factor = 1e6;

    void validate() const;
};

/// In full mode u/theta are the velocity and scalar of the damped system;
/// in perturbation mode they hold (v, theta-perturbation) and the
/// background (U, Theta)(t) comes from a LinearFlow.
struct SimState {
    double t = 0.0;
    SpectralField u;
    SpectralField theta;
};

struct Tendency {
    SpectralField du;
    SpectralField dtheta;
};

/// Full tendency of the damped system, damping terms included:
/// du/dt = P(-u.grad u + theta e_d) - nu u; dtheta/dt = -u.grad theta - lambda theta.
Tendency rhs_full(const SimState& s, const SimConfig& cfg);

/// Perturbation-system tendency around the linear flow (damping included):
/// dv/dt = P(-v.grad v - U.grad v - v.grad U + theta e_d + f) - nu v,
/// dtheta/dt = -v.grad theta - U.grad theta - v.grad Theta - lambda theta + g.
Tendency rhs_perturbation(const SimState& s, const SimConfig& cfg, const LinearFlow& flow);

struct StepOutcome {
    bool accepted = true;
    double suggested_dt = 0.0;  // set when the CFL bound rejects the step
};

/// One RK4 step with the damping integrated exactly (integrating factor
/// e^{-nu dt}, e^{-lambda dt}); time-dependent background evaluated at the
/// substage times. The state is untouched when the step is rejected.
/// flow is required in perturbation mode.
StepOutcome step(SimState& s, double dt, const SimConfig& cfg,
                 const LinearFlow* flow = nullptr);

struct RunFlags {
    bool blowup = false;
    bool nan = false;
    bool cfl_shrunk = false;  // at least one step ran below the requested dt
    double t_stop = 0.0;      // time actually reached
};

struct TimeSample {
    double t = 0.0;
    double u_h3 = 0.0;
    double theta_h3 = 0.0;
};

struct RunResult {
    std::vector<TimeSample> series;
    SimState final_state;
    RunFlags flags;
};

using Observer = std::function<void(const SimState&)>;

/// Advance to t_end with fixed steps (shortened at the CFL bound and at the
/// final partial step). Samples the H^3 norms every `stride` steps, plus the
/// initial and final states. Aborts with the corresponding flag when a norm
/// goes NaN or exceeds blowup_factor * max(initial H^3 sum, 1).
RunResult run(const SimConfig& cfg, SimState initial,
              const std::vector<Observer>& observers = {},
              const LinearFlow* flow = nullptr);

}  // namespace bsq
