#pragma once

// Command-line surface: amp, sweep, design, plan, figure, verify.
// run_cli is the whole program; the binary's main() only forwards to it.
// Exit codes: 0 success, 1 verification failure or --strict infeasibility,
// 2 usage or input errors.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "spfc/csv.hpp"
#include "spfc/design.hpp"
#include "spfc/figures.hpp"
#include "spfc/json_io.hpp"
#include "spfc/oracle.hpp"
#include "spfc/sagnac.hpp"
#include "spfc/scattering.hpp"
#include "spfc/sweep.hpp"
#include "spfc/verify.hpp"

namespace spfc::cli {

namespace detail {

struct ParamFlags {
    SystemParams params;
    std::string params_file;
    double gamma_scalar = 0.0;
    bool has_gamma_scalar = false;
};

inline void add_param_flags(CLI::App* cmd, ParamFlags& f) {
    auto* file = cmd->add_option("--params", f.params_file,
                                 "SystemParams as a JSON file");
    auto* g1 = cmd->add_option("--gamma1", f.params.gamma1,
                               "decay rate of a<->b into the loop [Gamma2]");
    auto* g2 = cmd->add_option("--gamma2", f.params.gamma2,
                               "decay rate of d<->c into the loop (reference)");
    auto* o1 = cmd->add_option("--omega1", f.params.omega1, "Rabi frequency of drive L1");
    auto* o2 = cmd->add_option("--omega2", f.params.omega2, "Rabi frequency of drive L2");
    auto* d1 = cmd->add_option("--delta1", f.params.delta1, "drive-1 detuning");
    auto* d2 = cmd->add_option("--delta2", f.params.delta2, "drive-2 detuning");
    auto* g = cmd->add_option_function<double>(
        "--gamma",
        [&f](double v) {
            f.gamma_scalar = v;
            f.has_gamma_scalar = true;
        },
        "dissipation rate applied to |a>, |f>, |d> alike");
    auto* ga = cmd->add_option("--gamma-a", f.params.gamma_a, "dissipation of |a>");
    auto* gf = cmd->add_option("--gamma-f", f.params.gamma_f, "dissipation of |f>");
    auto* gd = cmd->add_option("--gamma-d", f.params.gamma_d, "dissipation of |d>");
    g->excludes(ga)->excludes(gf)->excludes(gd);
    for (auto* opt : {g1, g2, o1, o2, d1, d2, g, ga, gf, gd})
        file->excludes(opt);
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

inline SystemParams resolve_params(const ParamFlags& f) {
    if (!f.params_file.empty())
        return system_params_from_json(load_json_file(f.params_file));
    SystemParams p = f.params;
    if (f.has_gamma_scalar)
        p.with_dissipation(f.gamma_scalar);
    return validate(p);
}

inline Json json_complex(const Complex& z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

inline Json json_metrics(const AmplitudePair& pair) {
    Json j;
    j["p_elastic"] = std::norm(pair.t1);
    j["p_inelastic"] = std::norm(pair.t2);
    j["survival"] = pair.survival();
    if (const auto f = try_fidelity(pair))
        j["fidelity"] = *f;
    else
        j["fidelity"] = nullptr;
    return j;
}

inline Json json_output_state(const OutputState& state) {
    Json entries = Json::array();
    for (const auto& a : state.amplitudes) {
        entries.push_back(Json{{"atom", a.atom == Atom::b ? "b" : "c"},
                               {"channel", a.channel == Channel::k ? "k" : "k_prime"},
                               {"port", a.port},
                               {"re", a.amplitude.real()},
                               {"im", a.amplitude.imag()}});
    }
    return Json{{"amplitudes", entries},
                {"norm", state.norm()},
                {"p_conversion", state.conversion_probability()}};
}

// "start:stop:points"
inline GridAxis parse_axis(const std::string& text) {
    GridAxis axis;
    char tail = '\0';
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &axis.start, &axis.stop,
                    &axis.points, &tail) != 3)
        throw std::invalid_argument("range must look like start:stop:points, got \"" +
                                    text + "\"");
    axis.values();  // validates
    return axis;
}

template <typename T>
void write_csv(const T& value, const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
        emit_csv(value, fallback, "<stdout>");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open " + path + " for writing");
    emit_csv(value, out, path);
}

inline void write_json(const Json& j, const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
        fallback << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    out.flush();
    if (!out)
        throw std::runtime_error("writing " + path + " failed");
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"single-photon frequency conversion in a Sagnac interferometer"};
    app.require_subcommand(1);

    // ---- amp -------------------------------------------------------------
    auto* amp = app.add_subcommand("amp", "transport amplitudes at one detuning");
    detail::ParamFlags amp_params;
    detail::add_param_flags(amp, amp_params);
    double amp_delta_a = 0.0;
    double amp_theta = 0.0;
    bool amp_sagnac = false, amp_single = false;
    amp->add_option("--delta-a", amp_delta_a, "input photon detuning Delta_a");
    amp->add_flag("--sagnac", amp_sagnac, "include the full interferometer output state");
    amp->add_flag("--single-direction", amp_single,
                  "include the single-direction output state");
    amp->add_option("--theta", amp_theta,
                    "relative clockwise/counterclockwise phase for --sagnac");

    // ---- sweep -----------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "sweep one variable, CSV out");
    detail::ParamFlags sweep_params;
    detail::add_param_flags(sweep, sweep_params);
    std::string sweep_spec_file, sweep_variable = "delta_a", sweep_output;
    double sweep_start = -20.0, sweep_stop = 20.0, sweep_delta_a = 0.0;
    int sweep_points = 2001;
    bool sweep_sagnac = false;
    sweep->add_option("--spec", sweep_spec_file, "SweepSpec as a JSON file");
    sweep->add_option("--variable", sweep_variable,
                      "delta_a|delta1|delta2|omega1|omega2|gamma");
    sweep->add_option("--start", sweep_start, "grid start");
    sweep->add_option("--stop", sweep_stop, "grid stop");
    sweep->add_option("--points", sweep_points, "grid points (>= 2)");
    sweep->add_option("--delta-a", sweep_delta_a,
                      "input detuning when it is not the swept variable");
    sweep->add_flag("--sagnac", sweep_sagnac, "append interferometer probability columns");
    sweep->add_option("--output", sweep_output, "output file (default stdout)");

    // ---- design ----------------------------------------------------------
    auto* design = app.add_subcommand(
        "design", "drive strengths nulling the elastic amplitude");
    double design_delta_a = 0.0, design_gamma1 = 1.0, design_gamma2 = 1.0;
    std::optional<double> design_delta1, design_delta2;
    std::string design_delta1_range, design_delta2_range, design_output;
    bool design_strict = false;
    design->add_option("--delta-a", design_delta_a, "input photon detuning")->required();
    design->add_option("--gamma1", design_gamma1, "decay rate of a<->b");
    design->add_option("--gamma2", design_gamma2, "decay rate of d<->c");
    design->add_option("--delta1", design_delta1, "fixed drive-1 detuning");
    design->add_option("--delta2", design_delta2, "fixed drive-2 detuning");
    design->add_option("--delta1-range", design_delta1_range,
                       "grid start:stop:points over Delta_1 (CSV map)");
    design->add_option("--delta2-range", design_delta2_range,
                       "grid start:stop:points over Delta_2 (CSV map)");
    design->add_option("--output", design_output, "output file (default stdout)");
    design->add_flag("--strict", design_strict, "exit 1 when nothing is feasible");

    // ---- plan ------------------------------------------------------------
    auto* plan = app.add_subcommand(
        "plan", "laser settings for a target output-frequency shift");
    double plan_shift = 0.0, plan_delta_a = 0.0, plan_gamma1 = 1.0, plan_gamma2 = 1.0;
    double plan_gamma = 0.0, plan_scan_start = -10.0, plan_scan_stop = 10.0;
    int plan_scan_points = 1001;
    std::string plan_diagram_file, plan_output;
    bool plan_strict = false;
    plan->add_option("--shift", plan_shift, "target shift omega_in - omega_out")
        ->required();
    plan->add_option("--diagram", plan_diagram_file, "LevelDiagram as a JSON file")
        ->required();
    plan->add_option("--delta-a", plan_delta_a, "input photon detuning");
    plan->add_option("--gamma1", plan_gamma1, "decay rate of a<->b");
    plan->add_option("--gamma2", plan_gamma2, "decay rate of d<->c");
    plan->add_option("--gamma", plan_gamma,
                     "dissipation rate used to report the planned-point fidelity");
    plan->add_option("--scan-start", plan_scan_start, "Delta_1 scan start");
    plan->add_option("--scan-stop", plan_scan_stop, "Delta_1 scan stop");
    plan->add_option("--scan-points", plan_scan_points, "Delta_1 scan points");
    plan->add_option("--output", plan_output, "output file (default stdout)");
    plan->add_flag("--strict", plan_strict, "exit 1 when no plan is feasible");

    // ---- figure ----------------------------------------------------------
    auto* figure = app.add_subcommand("figure", "published-figure data, CSV out");
    std::string figure_name, figure_output;
    figure->add_option("name", figure_name, "fig2a..fig2d, fig3a..fig3d, fig4a..fig4d")
        ->required();
    figure->add_option("--output", figure_output, "output file (default stdout)");

    // ---- verify ----------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify", "differential test of the closed forms against the oracle");
    VerifyOptions verify_opt;
    verify->add_option("--draws", verify_opt.draws, "number of random draws");
    verify->add_option("--seed", verify_opt.seed, "RNG seed");
    verify->add_option("--tolerance", verify_opt.tolerance,
                       "closed-vs-oracle amplitude tolerance");

    try {
        app.parse(argc, argv);

        if (amp->parsed()) {
            const SystemParams p = detail::resolve_params(amp_params);
            const InputPhoton in = validate(InputPhoton{amp_delta_a});
            const AmplitudePair pair = amplitudes(p, in);
            Json j;
            j["params"] = to_json(p);
            j["delta_a"] = in.delta_a;
            j["t1"] = detail::json_complex(pair.t1);
            j["t2"] = detail::json_complex(pair.t2);
            j["metrics"] = detail::json_metrics(pair);
            if (amp_sagnac) {
                Json s = detail::json_output_state(interferometer_output(pair, amp_theta));
                s["theta"] = amp_theta;
                j["sagnac"] = s;
            }
            if (amp_single)
                j["single_direction"] =
                    detail::json_output_state(single_direction_output(pair));
            detail::write_json(j, "", out);
            return 0;
        }

        if (sweep->parsed()) {
            SweepSpec spec;
            if (!sweep_spec_file.empty()) {
                spec = sweep_spec_from_json(detail::load_json_file(sweep_spec_file));
            } else {
                spec.variable = sweep_variable_from(sweep_variable);
                spec.start = sweep_start;
                spec.stop = sweep_stop;
                spec.points = sweep_points;
                spec.base = detail::resolve_params(sweep_params);
                spec.base_delta_a = sweep_delta_a;
                spec.with_sagnac = sweep_sagnac;
                validate(spec);
            }
            detail::write_csv(run_sweep(spec), sweep_output, out);
            return 0;
        }

        if (design->parsed()) {
            const bool map_mode =
                !design_delta1_range.empty() || !design_delta2_range.empty();
            if (!map_mode) {
                if (!design_delta1 || !design_delta2)
                    throw std::invalid_argument(
                        "design needs --delta1/--delta2 or a *-range option");
                const DesignSolution s =
                    rabi_for_unity(design_delta_a, *design_delta1, *design_delta2,
                                   design_gamma1, design_gamma2);
                Json j = to_json(s);
                j["delta_a"] = design_delta_a;
                j["delta1"] = *design_delta1;
                j["delta2"] = *design_delta2;
                j["gamma1"] = design_gamma1;
                j["gamma2"] = design_gamma2;
                detail::write_json(j, design_output, out);
                return design_strict && !s.feasible ? 1 : 0;
            }
            GridAxis a1 = design_delta1_range.empty()
                              ? GridAxis::fixed(design_delta1.value_or(0.0))
                              : detail::parse_axis(design_delta1_range);
            GridAxis a2 = design_delta2_range.empty()
                              ? GridAxis::fixed(design_delta2.value_or(0.0))
                              : detail::parse_axis(design_delta2_range);
            const FeasibilityMap map =
                feasibility_map(a1, a2, design_gamma1, design_gamma2, design_delta_a);
            detail::write_csv(map, design_output, out);
            const bool any_feasible =
                std::any_of(map.cells.begin(), map.cells.end(),
                            [](const FeasibilityCell& c) { return c.solution.feasible; });
            return design_strict && !any_feasible ? 1 : 0;
        }

        if (plan->parsed()) {
            const LevelDiagram diagram =
                level_diagram_from_json(detail::load_json_file(plan_diagram_file));
            ScanOptions scan;
            scan.delta1_scan = {plan_scan_start, plan_scan_stop, plan_scan_points};
            const ConversionPlan result = plan_conversion(
                plan_shift, diagram, plan_gamma1, plan_gamma2, plan_delta_a, scan);
            Json j;
            j["feasible"] = result.feasible;
            j["shift"] = result.shift;
            j["delta_a"] = plan_delta_a;
            j["scan"] = Json{{"start", plan_scan_start},
                             {"stop", plan_scan_stop},
                             {"points", plan_scan_points}};
            j["objective"] = "min_total_drive_power";
            if (result.feasible) {
                j["omega_L1"] = result.omega_L1;
                j["omega_L2"] = result.omega_L2;
                j["delta1"] = result.delta1;
                j["delta2"] = result.delta2;
                j["solution"] = to_json(result.solution);
                const double omega_in = diagram.omega_a - plan_delta_a;
                j["omega_in"] = omega_in;
                j["omega_out"] = omega_in - result.shift;

                SystemParams planned;
                planned.gamma1 = plan_gamma1;
                planned.gamma2 = plan_gamma2;
                planned.omega1 = result.solution.omega1();
                planned.omega2 = result.solution.omega2();
                planned.delta1 = result.delta1;
                planned.delta2 = result.delta2;
                planned.with_dissipation(plan_gamma);
                const AmplitudePair at_plan =
                    amplitudes(validate(planned), InputPhoton{plan_delta_a});
                j["predicted"] = detail::json_metrics(at_plan);
            }
            detail::write_json(j, plan_output, out);
            return plan_strict && !result.feasible ? 1 : 0;
        }

        if (figure->parsed()) {
            const FigurePreset preset = figure_preset(figure_name);
            std::visit(
                [&](const auto& request) {
                    using T = std::decay_t<decltype(request)>;
                    if constexpr (std::is_same_v<T, SweepSpec>)
                        detail::write_csv(run_sweep(request), figure_output, out);
                    else if constexpr (std::is_same_v<T, FeasibilityRequest>)
                        detail::write_csv(request.run(), figure_output, out);
                    else
                        detail::write_csv(request, figure_output, out);
                },
                preset);
            return 0;
        }

        if (verify->parsed()) {
            const VerifyReport rep = run_verification(verify_opt);
            out << "draws: " << rep.draws << '\n';
            out << "seed: " << rep.seed << '\n';
            out << "tolerance: " << format_g17(rep.tolerance) << '\n';
            out << "max deviation (closed vs oracle): "
                << format_g17(rep.max_forward_deviation) << '\n';
            out << "max retrieval deviation: "
                << format_g17(rep.max_retrieval_deviation) << '\n';
            out << "max lossless unitarity defect: "
                << format_g17(rep.max_unitarity_defect) << '\n';
            out << "max oracle residual: " << format_g17(rep.max_residual) << '\n';
            out << "max retrieval reciprocity defect: "
                << format_g17(rep.max_reciprocity_defect) << '\n';
            out << "max composition defect: "
                << format_g17(rep.max_composition_defect) << '\n';
            out << "max odd-mode conversion: "
                << format_g17(rep.max_theta_pi_conversion) << '\n';
            out << "max lossy survival: " << format_g17(rep.max_lossy_survival) << '\n';
            out << "result: " << (rep.passed() ? "PASS" : "FAIL") << '\n';
            err << "elapsed seconds: " << rep.elapsed_seconds << '\n';
            return rep.passed() ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        // prints help for --help, the parse diagnostic otherwise
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace spfc::cli
