#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "bsq/sim.hpp"

namespace bsq {

/// Largest sigma = 2^{-k} (k integer, either sign) with
/// C_abs sigma^{3/2} <= sigma nu / 2 and C_abs sigma^{1/2} <= lambda / 2,
/// i.e. sigma <= min(nu, lambda)^2 / (4 C_abs^2). Guarantees
/// sigma nu ||v||^2 + lambda ||th||^2 - sigma (th, v_d)_{H^3} >= B/2.
double choose_sigma(double nu, double lambda, double c_abs = 0.5);

/// A = sigma ||v||_{H^3}^2 + ||th||_{H^3}^2,
/// B = sigma nu ||v||_{H^3}^2 + lambda ||th||_{H^3}^2.
std::pair<double, double> energy_functionals(const SpectralField& v,
                                             const SpectralField& theta, double sigma,
                                             double nu, double lambda);

struct ConditionParams {
    double C = 1.0;
    double delta = 1.0;
};

struct ConditionReport {
    double lhs = 0.0;
    bool satisfied = true;
    /// sensitivity samples: (C, lhs(C)) over a fixed C-grid {1, 2, 4, 8}
    std::vector<std::pair<double, double>> lhs_over_c;
};

/// (v0_h3^2 + theta0_h3^2 + E0) * exp(C F0 + C E0) compared against delta.
ConditionReport condition_lhs(double v0_h3, double theta0_h3, double e0, double f0,
                              const ConditionParams& params);

struct MonitorVerdict {
    bool exited = false;
    double t_exit = 0.0;
    std::size_t index = 0;
};

/// First sample with A > eta, if any ("never exited" otherwise).
MonitorVerdict bootstrap_monitor(const std::vector<std::pair<double, double>>& a_series,
                                 double eta);

struct IdentityTerms {
    double lhs = 0.0;      // (1/2) dA/dt (centered) + B - sigma (th, v_d)_{H^3}
    double rhs = 0.0;      // I1 + I2 + I3 + I4
    double i1 = 0.0, i2 = 0.0, i3 = 0.0, i4 = 0.0;
    double residual = 0.0;  // |lhs - rhs|
};

/// Exact energy balance of the perturbation system evaluated on three
/// snapshots (t - dt, t, t + dt): the time derivative is the only
/// finite-difference ingredient, so the residual is O(dt^2) on exact states.
IdentityTerms energy_identity_check(const SimState& prev, const SimState& mid,
                                    const SimState& next, double sigma,
                                    const SimConfig& cfg, const LinearFlow& flow);

struct CommutatorResult {
    double lhs = 0.0;     // sum over |alpha| <= m of ||D^alpha(g f) - g D^alpha f||_{L^2}
    double bracket = 0.0; // ||f||_{H^{m-1}} ||grad g||_inf + ||f||_inf ||g||_{H^m}
    double ratio = 0.0;   // empirical constant
};

/// Brute-force commutator expansion for single-component band-limited
/// fields; products are exact (no dealiasing), so keep supports well inside
/// the grid.
CommutatorResult commutator_check(const SpectralField& g, const SpectralField& f,
                                  int m = 3);

struct DecayFit {
    double rate = 0.0;      // minus the log-linear slope
    double residual = 0.0;  // rms residual of the log fit
    bool ok = false;        // false when the window has <= 1 positive sample
};

/// Least-squares exponential rate of a positive series on [t_lo, t_hi].
DecayFit decay_fit(const std::vector<std::pair<double, double>>& series, double t_lo,
                   double t_hi);

struct EnergySample {
    double t = 0.0;
    double v_h3 = 0.0;
    double theta_h3 = 0.0;
    double a = 0.0;
    double b = 0.0;
};

struct EnergyReport {
    std::vector<EnergySample> series;
    double sigma = 1.0;
    double eta = 0.0;
    double condition_lhs = 0.0;
    MonitorVerdict monitor;
    DecayFit decay;
    RunFlags flags;
};

/// Assemble the report from a run's norm series.
EnergyReport make_energy_report(const RunResult& run, double sigma, double nu,
                                double lambda, double eta, double cond_lhs,
                                double fit_t_lo, double fit_t_hi);

/// CSV with the fixed header "t, v_h3, theta_h3, A, B".
void write_csv(std::ostream& os, const EnergyReport& report);

}  // namespace bsq
