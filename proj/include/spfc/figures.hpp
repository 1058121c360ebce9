#pragma once

// Named presets reproducing the published figure data. Caption constants are
// pinned here once; axis ranges the captions leave open use the documented
// defaults (detuning sweeps over [-20, 20] with 2001 points, design grids
// over [-10, 10]).

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spfc/design.hpp"
#include "spfc/sweep.hpp"

namespace spfc {

struct FeasibilityRequest {
    GridAxis delta1_axis, delta2_axis;
    double gamma1 = 0.0, gamma2 = 0.0, delta_a = 0.0;

    FeasibilityMap run() const {
        return feasibility_map(delta1_axis, delta2_axis, gamma1, gamma2, delta_a);
    }
};

// Conditioned conversion probability of several configurations on a common
// detuning axis (one curve per labeled configuration).
struct FidelityComparison {
    std::vector<std::string> labels;
    std::vector<SweepSpec> configs;
};

using FigurePreset = std::variant<SweepSpec, FeasibilityRequest, FidelityComparison>;

namespace detail {

inline SweepSpec detuning_sweep(SystemParams base) {
    SweepSpec spec;
    spec.variable = SweepVariable::delta_a;
    spec.start = -20.0;
    spec.stop = 20.0;
    spec.points = 2001;
    spec.base = base;
    return spec;
}

// Resonant drives with Gamma1/Gamma2 = Omega1^2/Omega2^2.
inline SystemParams resonant_ratio_params(double gamma1, double omega2) {
    SystemParams p;
    p.gamma1 = gamma1;
    p.gamma2 = 1.0;
    p.omega1 = omega2 * std::sqrt(gamma1);
    p.omega2 = omega2;
    p.delta1 = 0.0;
    p.delta2 = 0.0;
    return p;
}

}  // namespace detail

inline std::vector<std::string_view> figure_preset_names() {
    return {"fig2a", "fig2b", "fig2c", "fig2d", "fig3a", "fig3b",
            "fig3c", "fig3d", "fig4a", "fig4b", "fig4c", "fig4d"};
}

inline FigurePreset figure_preset(std::string_view name) {
    const double sqrt2 = std::sqrt(2.0);

    if (name == "fig2a")
        return detail::detuning_sweep(detail::resonant_ratio_params(2.0, 5.0));
    if (name == "fig2b")
        return detail::detuning_sweep(detail::resonant_ratio_params(2.0, 2.0));
    if (name == "fig2c")
        return detail::detuning_sweep(detail::resonant_ratio_params(2.0, 0.5));
    if (name == "fig2d")
        return detail::detuning_sweep(detail::resonant_ratio_params(1.0, 2.0));

    if (name == "fig3a" || name == "fig3b") {
        // (a) plots Omega1, (b) Omega2; the grid is the same
        return FeasibilityRequest{{-10.0, 10.0, 201}, {-10.0, 10.0, 201}, 2.0, 1.0, 3.0};
    }
    if (name == "fig3c")
        return FeasibilityRequest{GridAxis::fixed(-3.0), {-10.0, 10.0, 1001}, 2.0, 1.0, 3.0};
    if (name == "fig3d")
        return FeasibilityRequest{GridAxis::fixed(5.0), {-10.0, 10.0, 1001}, 2.0, 1.0, 3.0};

    if (name == "fig4a" || name == "fig4b" || name == "fig4c" || name == "fig4d") {
        SystemParams a;  // weak resonant drives
        a.gamma1 = 2.0;
        a.omega1 = sqrt2 / 5.0;
        a.omega2 = 0.2;
        a.with_dissipation(0.1);

        SystemParams b = detail::resonant_ratio_params(2.0, 5.0);  // strong drives
        b.with_dissipation(0.1);

        SystemParams c;  // detuned unity-conversion point of Eq. 5 at Delta_a = 3
        c.gamma1 = 2.0;
        c.omega1 = std::sqrt(91.0) / 3.0;
        c.omega2 = std::sqrt(140.0) / 3.0;
        c.delta1 = -4.0;
        c.delta2 = -4.0;
        c.with_dissipation(0.1);

        if (name == "fig4a") return detail::detuning_sweep(a);
        if (name == "fig4b") return detail::detuning_sweep(b);
        if (name == "fig4c") return detail::detuning_sweep(c);
        return FidelityComparison{
            {"a", "b", "c"},
            {detail::detuning_sweep(a), detail::detuning_sweep(b), detail::detuning_sweep(c)}};
    }

    throw std::invalid_argument("unknown figure preset: " + std::string(name));
}

}  // namespace spfc
