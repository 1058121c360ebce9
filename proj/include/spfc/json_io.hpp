#pragma once

// JSON representations used by the CLI for configs and single results.
// Field names mirror the record fields exactly; unknown keys are rejected.

#include <set>
#include <string>

#include <json.hpp>

#include "spfc/design.hpp"
#include "spfc/params.hpp"
#include "spfc/sweep.hpp"

namespace spfc {

using Json = nlohmann::json;

namespace detail {

inline void require_keys(const Json& j, const std::set<std::string>& required,
                         const std::set<std::string>& optional,
                         const std::string& what) {
    if (!j.is_object())
        throw std::invalid_argument(what + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!required.contains(key) && !optional.contains(key))
            throw std::invalid_argument("unknown field \"" + key + "\" in " + what);
    }
    for (const auto& key : required)
        if (!j.contains(key))
            throw std::invalid_argument("missing field \"" + key + "\" in " + what);
}

inline double number_at(const Json& j, const std::string& key) {
    const auto& v = j.at(key);
    if (!v.is_number())
        throw std::invalid_argument("field \"" + key + "\" must be a number");
    return v.get<double>();
}

}  // namespace detail

inline Json to_json(const SystemParams& p) {
    return Json{{"gamma1", p.gamma1},   {"gamma2", p.gamma2},
                {"omega1", p.omega1},   {"omega2", p.omega2},
                {"delta1", p.delta1},   {"delta2", p.delta2},
                {"gamma_a", p.gamma_a}, {"gamma_f", p.gamma_f},
                {"gamma_d", p.gamma_d}};
}

// Accepts either the three per-level dissipation rates or a single scalar
// "gamma" applied to all of them; omitted rates default to zero.
inline SystemParams system_params_from_json(const Json& j) {
    detail::require_keys(
        j, {"gamma1", "gamma2", "omega1", "omega2", "delta1", "delta2"},
        {"gamma_a", "gamma_f", "gamma_d", "gamma"}, "SystemParams");
    const bool has_scalar = j.contains("gamma");
    if (has_scalar &&
        (j.contains("gamma_a") || j.contains("gamma_f") || j.contains("gamma_d")))
        throw std::invalid_argument(
            "\"gamma\" cannot be combined with per-level dissipation rates");
    SystemParams p;
    p.gamma1 = detail::number_at(j, "gamma1");
    p.gamma2 = detail::number_at(j, "gamma2");
    p.omega1 = detail::number_at(j, "omega1");
    p.omega2 = detail::number_at(j, "omega2");
    p.delta1 = detail::number_at(j, "delta1");
    p.delta2 = detail::number_at(j, "delta2");
    if (has_scalar) {
        p.with_dissipation(detail::number_at(j, "gamma"));
    } else {
        p.gamma_a = j.contains("gamma_a") ? detail::number_at(j, "gamma_a") : 0.0;
        p.gamma_f = j.contains("gamma_f") ? detail::number_at(j, "gamma_f") : 0.0;
        p.gamma_d = j.contains("gamma_d") ? detail::number_at(j, "gamma_d") : 0.0;
    }
    return validate(p);
}

inline Json to_json(const LevelDiagram& d) {
    return Json{{"omega_a", d.omega_a},   {"omega_b", d.omega_b},
                {"omega_c", d.omega_c},   {"omega_d", d.omega_d},
                {"omega_f", d.omega_f},   {"omega_L1", d.omega_L1},
                {"omega_L2", d.omega_L2}};
}

inline LevelDiagram level_diagram_from_json(const Json& j) {
    detail::require_keys(j,
                         {"omega_a", "omega_b", "omega_c", "omega_d", "omega_f"},
                         {"omega_L1", "omega_L2"}, "LevelDiagram");
    LevelDiagram d;
    d.omega_a = detail::number_at(j, "omega_a");
    d.omega_b = detail::number_at(j, "omega_b");
    d.omega_c = detail::number_at(j, "omega_c");
    d.omega_d = detail::number_at(j, "omega_d");
    d.omega_f = detail::number_at(j, "omega_f");
    d.omega_L1 = j.contains("omega_L1") ? detail::number_at(j, "omega_L1") : 0.0;
    d.omega_L2 = j.contains("omega_L2") ? detail::number_at(j, "omega_L2") : 0.0;
    return validate(d);
}

inline SweepSpec sweep_spec_from_json(const Json& j) {
    detail::require_keys(j, {"variable", "start", "stop", "points", "params"},
                         {"delta_a", "outputs"}, "SweepSpec");
    SweepSpec spec;
    spec.variable = sweep_variable_from(j.at("variable").get<std::string>());
    spec.start = detail::number_at(j, "start");
    spec.stop = detail::number_at(j, "stop");
    if (!j.at("points").is_number_integer())
        throw std::invalid_argument("field \"points\" must be an integer");
    spec.points = j.at("points").get<int>();
    spec.base = system_params_from_json(j.at("params"));
    if (j.contains("delta_a"))
        spec.base_delta_a = detail::number_at(j, "delta_a");
    if (j.contains("outputs")) {
        for (const auto& o : j.at("outputs")) {
            const auto name = o.get<std::string>();
            if (name == "sagnac")
                spec.with_sagnac = true;
            else if (name != "amplitudes" && name != "metrics")
                throw std::invalid_argument("unknown output \"" + name + "\"");
        }
    }
    validate(spec);
    return spec;
}

inline Json to_json(const DesignSolution& s) {
    Json j{{"omega1_sq", s.omega1_sq},
           {"omega2_sq", s.omega2_sq},
           {"feasible", s.feasible},
           {"diagnostic", std::string(to_string(s.diagnostic))}};
    if (s.feasible) {
        j["omega1"] = s.omega1();
        j["omega2"] = s.omega2();
    }
    return j;
}

}  // namespace spfc
