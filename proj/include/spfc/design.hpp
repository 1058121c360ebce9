#pragma once

// Inverse problem: drive strengths that null the elastic amplitude (t1 = 0)
// at a given input detuning, feasibility of that solution over laser
// frequencies, and planning of laser settings for a target output frequency.

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "spfc/params.hpp"

namespace spfc {

enum class FeasibilityDiagnostic {
    ok,
    denominator_singular,
    omega1_sq_nonpositive,
    omega2_sq_nonpositive,
};

inline std::string_view to_string(FeasibilityDiagnostic d) {
    switch (d) {
        case FeasibilityDiagnostic::ok: return "ok";
        case FeasibilityDiagnostic::denominator_singular: return "denominator_singular";
        case FeasibilityDiagnostic::omega1_sq_nonpositive: return "omega1_sq_nonpositive";
        case FeasibilityDiagnostic::omega2_sq_nonpositive: return "omega2_sq_nonpositive";
    }
    return "unknown";
}

struct DesignSolution {
    double omega1_sq = 0.0;
    double omega2_sq = 0.0;
    bool feasible = false;
    FeasibilityDiagnostic diagnostic = FeasibilityDiagnostic::ok;

    double omega1() const { return feasible ? std::sqrt(omega1_sq) : 0.0; }
    double omega2() const { return feasible ? std::sqrt(omega2_sq) : 0.0; }
    double total_drive_power() const { return omega1_sq + omega2_sq; }
};

// Nulling t1 requires Re A = Im A = 0; solving that pair for the squared Rabi
// frequencies gives
//   Omega1^2 = Gamma2 (Da-D1) (Da^2 + Gamma1^2) / [(Da-D1+D2) Gamma1 + Da Gamma2]
//   Omega2^2 = Gamma1 (Da-D1) [(Da-D1+D2)^2 + Gamma2^2] / [same denominator].
// Both must come out strictly positive to be realizable; Omega = 0 would
// switch the conversion off entirely. Infeasibility is a value, not an error.
inline DesignSolution rabi_for_unity(double delta_a, double delta1, double delta2,
                                     double gamma1, double gamma2) {
    const double x = delta_a;
    const double y = delta_a - delta1;
    const double z = delta_a - delta1 + delta2;
    const double den = z * gamma1 + x * gamma2;

    DesignSolution s;
    if (std::abs(den) < 1e-12) {
        s.diagnostic = FeasibilityDiagnostic::denominator_singular;
        return s;
    }
    s.omega1_sq = gamma2 * y * (x * x + gamma1 * gamma1) / den;
    s.omega2_sq = gamma1 * y * (z * z + gamma2 * gamma2) / den;
    if (!(s.omega1_sq > 0.0)) {
        s.diagnostic = FeasibilityDiagnostic::omega1_sq_nonpositive;
        return s;
    }
    if (!(s.omega2_sq > 0.0)) {
        s.diagnostic = FeasibilityDiagnostic::omega2_sq_nonpositive;
        return s;
    }
    s.feasible = true;
    return s;
}

// Resonant rule (Delta_a = Delta_1 = Delta_2 = 0): t1 = 0 whenever
// Gamma1/Gamma2 = Omega1^2/Omega2^2. Returns the Omega1 matching a given
// Omega2.
inline double resonant_rabi_ratio(double gamma1, double gamma2, double omega2) {
    if (!(gamma1 > 0.0) || !(gamma2 > 0.0) || !(omega2 > 0.0))
        throw std::invalid_argument("resonant_rabi_ratio requires positive inputs");
    return omega2 * std::sqrt(gamma1 / gamma2);
}

// Uniformly spaced axis; a single-point axis expresses a fixed slice.
struct GridAxis {
    double start = 0.0;
    double stop = 0.0;
    int points = 0;

    static GridAxis fixed(double value) { return {value, value, 1}; }

    std::vector<double> values() const {
        if (points < 1)
            throw std::invalid_argument("grid axis must have at least one point");
        if (points == 1)
            return {start};
        if (!(start < stop))
            throw std::invalid_argument("grid axis requires start < stop");
        std::vector<double> v(points);
        const double step = (stop - start) / (points - 1);
        for (int i = 0; i < points; ++i)
            v[i] = start + step * i;
        v.back() = stop;
        return v;
    }
};

struct FeasibilityCell {
    double delta1 = 0.0;
    double delta2 = 0.0;
    DesignSolution solution;
};

// Row-major over (delta1 outer, delta2 inner); cells are independent.
struct FeasibilityMap {
    GridAxis delta1_axis, delta2_axis;
    double gamma1 = 0.0, gamma2 = 0.0, delta_a = 0.0;
    std::vector<FeasibilityCell> cells;
};

inline FeasibilityMap feasibility_map(GridAxis delta1_axis, GridAxis delta2_axis,
                                      double gamma1, double gamma2, double delta_a) {
    const auto d1 = delta1_axis.values();
    const auto d2 = delta2_axis.values();
    FeasibilityMap map{delta1_axis, delta2_axis, gamma1, gamma2, delta_a, {}};
    map.cells.reserve(d1.size() * d2.size());
    for (double a : d1)
        for (double b : d2)
            map.cells.push_back({a, b, rabi_for_unity(delta_a, a, b, gamma1, gamma2)});
    return map;
}

struct ScanOptions {
    GridAxis delta1_scan{-10.0, 10.0, 1001};
};

// Laser settings for a target frequency shift s = omega_in - omega_out.
struct ConversionPlan {
    bool feasible = false;
    double shift = 0.0;
    double omega_L1 = 0.0;
    double omega_L2 = 0.0;
    double delta1 = 0.0;
    double delta2 = 0.0;
    DesignSolution solution;
};

// The target shift pins omega_L1 - omega_L2 = s - omega_cb, leaving Delta_1
// free. Scans Delta_1, keeps feasible cells, and picks the one with the
// least total drive power Omega1^2 + Omega2^2 (tie-break: smaller |Delta_1|,
// then smaller Delta_1, so the plan is deterministic for a fixed grid).
inline ConversionPlan plan_conversion(double shift, const LevelDiagram& diagram,
                                      double gamma1, double gamma2, double delta_a,
                                      const ScanOptions& scan = {}) {
    const double laser_diff = shift - diagram.omega_cb();
    const double omega_ad = diagram.omega_a - diagram.omega_d;

    ConversionPlan plan;
    plan.shift = shift;

    double best_power = std::numeric_limits<double>::infinity();
    for (double d1 : scan.delta1_scan.values()) {
        // both drives reference the same |f>: Delta_2 = Delta_1 - omega_ad + (L1 - L2)
        const double d2 = d1 - omega_ad + laser_diff;
        const DesignSolution s = rabi_for_unity(delta_a, d1, d2, gamma1, gamma2);
        if (!s.feasible)
            continue;
        const double power = s.total_drive_power();
        const bool better =
            power < best_power ||
            (power == best_power &&
             (std::abs(d1) < std::abs(plan.delta1) ||
              (std::abs(d1) == std::abs(plan.delta1) && d1 < plan.delta1)));
        if (better) {
            best_power = power;
            plan.feasible = true;
            plan.delta1 = d1;
            plan.delta2 = d2;
            plan.solution = s;
        }
    }
    if (plan.feasible) {
        plan.omega_L1 = (diagram.omega_a - diagram.omega_f) - plan.delta1;
        plan.omega_L2 = (diagram.omega_d - diagram.omega_f) - plan.delta2;
    }
    return plan;
}

}  // namespace spfc
