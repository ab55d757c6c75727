#pragma once

#include <cstdint>
#include <string>

#include "bsq/linear_flow.hpp"
#include "bsq/sim.hpp"

namespace bsq {

/// One experiment description, read from a JSON config file. Every key is
/// optional; defaults reproduce the standard 2D desk-scale setup. Keys:
///   dimension (2|3), epsilon, p_exponent, transition_order,
///   grid: {L, N, dealias_fraction, widen},
///   nu, lambda, mode ("full"|"perturbation"), cfl, dt, t_end, stride,
///   guards: {blowup_factor},
///   perturbation: {h3_norm, seed},
///   sigma: {c_abs},
///   condition: {C, delta},
///   quadrature: {mode ("adaptive"|"upper_bound"), rel_tol, t_max}
/// When grid.L/N are absent the grid is sized from epsilon (2D) or set to
/// the coarse 3D default L = 8, N = 72.
struct Setup {
    int dimension = 2;
    double epsilon = 0.25;
    double p_exponent = 2.0;
    int transition_order = 1;
    GridSpec grid;
    bool grid_explicit = false;

    double nu = 1.0;
    double lambda = 1.0;
    SimConfig::Mode mode = SimConfig::Mode::perturbation;
    double cfl = 0.4;
    double dt = 0.01;
    double t_end = 20.0;
    int stride = 10;
    double blowup_factor = 1e6;

    double perturbation_h3 = 0.0;
    std::uint64_t seed = 1;

    double sigma_c_abs = 0.5;
    double condition_c = 1.0;
    double condition_delta = 1.0;

    QuadratureSpec quadrature;

    SimConfig sim_config() const;
    void validate() const;
};

/// Throws std::runtime_error with a usage-style message on unreadable files,
/// JSON syntax errors, unknown enum strings, or invalid values.
Setup load_setup(const std::string& path);

/// Parse from a JSON string (used by load_setup and the tests).
Setup parse_setup(const std::string& json_text);

}  // namespace bsq
