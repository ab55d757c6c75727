#include "bsq/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bsq {

SimConfig Setup::sim_config() const {
    SimConfig cfg;
    cfg.mode = mode;
    cfg.nu = nu;
    cfg.lambda = lambda;
    cfg.cfl = cfl;
    cfg.dt = dt;
    cfg.t_end = t_end;
    cfg.stride = stride;
    cfg.blowup_factor = blowup_factor;
    return cfg;
}

void Setup::validate() const {
    if (dimension != 2 && dimension != 3)
        throw std::runtime_error("config: dimension must be 2 or 3");
    try {
        grid.validate();
        sim_config().validate();
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("config: ") + e.what());
    }
    if (!(sigma_c_abs > 0.0)) throw std::runtime_error("config: sigma.c_abs must be positive");
    if (!(condition_c > 0.0) || !(condition_delta > 0.0))
        throw std::runtime_error("config: condition.C and condition.delta must be positive");
    if (perturbation_h3 < 0.0)
        throw std::runtime_error("config: perturbation.h3_norm must be >= 0");
}

namespace {

void reject_unknown(const nlohmann::json& j, std::initializer_list<const char*> keys,
                    const char* where) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : keys)
            if (item.key() == k) {
                known = true;
                break;
            }
        if (!known)
            throw std::runtime_error(std::string("config: unknown key \"") + item.key() +
                                     "\" in " + where);
    }
}

}  // namespace

Setup parse_setup(const std::string& json_text) try {
    nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error("config: not valid JSON");
    if (!j.is_object()) throw std::runtime_error("config: top level must be an object");
    reject_unknown(j,
                   {"dimension", "epsilon", "p_exponent", "transition_order", "grid", "nu",
                    "lambda", "mode", "cfl", "dt", "t_end", "stride", "guards",
                    "perturbation", "sigma", "condition", "quadrature"},
                   "the top level");
    Setup s;
    s.dimension = j.value("dimension", s.dimension);
    if (s.dimension != 2 && s.dimension != 3)
        throw std::runtime_error("config: dimension must be 2 or 3");
    if (j.contains("epsilon") && !(j["epsilon"].is_number() && j["epsilon"].get<double>() > 0.0))
        throw std::runtime_error("config: epsilon must be a positive number");
    s.epsilon = j.value("epsilon", s.epsilon);
    s.p_exponent = j.value("p_exponent", s.p_exponent);
    s.transition_order = j.value("transition_order", s.transition_order);
    s.nu = j.value("nu", s.nu);
    s.lambda = j.value("lambda", s.lambda);
    if (j.contains("mode")) {
        std::string m = j["mode"].get<std::string>();
        if (m == "full")
            s.mode = SimConfig::Mode::full;
        else if (m == "perturbation")
            s.mode = SimConfig::Mode::perturbation;
        else
            throw std::runtime_error("config: mode must be \"full\" or \"perturbation\"");
    }
    s.cfl = j.value("cfl", s.cfl);
    s.dt = j.value("dt", s.dt);
    s.t_end = j.value("t_end", s.t_end);
    s.stride = j.value("stride", s.stride);
    if (j.contains("guards")) {
        reject_unknown(j["guards"], {"blowup_factor"}, "\"guards\"");
        s.blowup_factor = j["guards"].value("blowup_factor", s.blowup_factor);
    }
    if (j.contains("perturbation")) {
        reject_unknown(j["perturbation"], {"h3_norm", "seed"}, "\"perturbation\"");
        s.perturbation_h3 = j["perturbation"].value("h3_norm", s.perturbation_h3);
        s.seed = j["perturbation"].value("seed", s.seed);
    }
    if (j.contains("sigma")) {
        reject_unknown(j["sigma"], {"c_abs"}, "\"sigma\"");
        s.sigma_c_abs = j["sigma"].value("c_abs", s.sigma_c_abs);
    }
    if (j.contains("condition")) {
        reject_unknown(j["condition"], {"C", "delta"}, "\"condition\"");
        s.condition_c = j["condition"].value("C", s.condition_c);
        s.condition_delta = j["condition"].value("delta", s.condition_delta);
    }
    if (j.contains("quadrature")) {
        const auto& q = j["quadrature"];
        reject_unknown(q, {"mode", "rel_tol", "t_max"}, "\"quadrature\"");
        if (q.contains("mode")) {
            std::string m = q["mode"].get<std::string>();
            if (m == "adaptive")
                s.quadrature.mode = QuadratureSpec::Mode::adaptive;
            else if (m == "upper_bound")
                s.quadrature.mode = QuadratureSpec::Mode::upper_bound;
            else
                throw std::runtime_error(
                    "config: quadrature.mode must be \"adaptive\" or \"upper_bound\"");
        }
        s.quadrature.rel_tol = q.value("rel_tol", s.quadrature.rel_tol);
        s.quadrature.t_max = q.value("t_max", s.quadrature.t_max);
    }
    // grid: explicit keys win; otherwise size from epsilon (2D) or the 3D coarse default
    if (s.dimension == 3) {
        s.grid = GridSpec{3, 8.0, 72, 2.0 / 3.0};
    } else {
        s.grid = grid_for_epsilon(s.epsilon, 2);
    }
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        reject_unknown(g, {"L", "N", "dealias_fraction", "widen"}, "\"grid\"");
        int widen = g.value("widen", 1);
        if (!g.contains("L") && !g.contains("N") && widen > 1 && s.dimension == 2)
            s.grid = grid_for_epsilon(s.epsilon, 2, widen);
        s.grid.dim = s.dimension;
        s.grid.scale = g.value("L", s.grid.scale);
        s.grid.n = g.value("N", s.grid.n);
        s.grid.dealias_fraction = g.value("dealias_fraction", s.grid.dealias_fraction);
        s.grid_explicit = g.contains("L") || g.contains("N");
    }
    s.grid.dim = s.dimension;
    s.validate();
    return s;
} catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("config: ") + e.what());
}

Setup load_setup(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("config: cannot open " + path);
    std::stringstream buf;
    buf << is.rdbuf();
    return parse_setup(buf.str());
}

}  // namespace bsq
