#pragma once

// Sweep engine: evaluates the transport amplitudes over a one-dimensional
// parameter grid. Points are independent pure evaluations; they may be
// computed in parallel (capped by SPFC_THREADS) but rows always come out in
// grid order.

#include <complex>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "spfc/amplitude.hpp"
#include "spfc/params.hpp"
#include "spfc/sagnac.hpp"
#include "spfc/scattering.hpp"

namespace spfc {

enum class SweepVariable { delta_a, delta1, delta2, omega1, omega2, gamma };

inline std::string_view to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::delta_a: return "delta_a";
        case SweepVariable::delta1: return "delta1";
        case SweepVariable::delta2: return "delta2";
        case SweepVariable::omega1: return "omega1";
        case SweepVariable::omega2: return "omega2";
        case SweepVariable::gamma: return "gamma";
    }
    return "unknown";
}

inline SweepVariable sweep_variable_from(std::string_view name) {
    if (name == "delta_a") return SweepVariable::delta_a;
    if (name == "delta1") return SweepVariable::delta1;
    if (name == "delta2") return SweepVariable::delta2;
    if (name == "omega1") return SweepVariable::omega1;
    if (name == "omega2") return SweepVariable::omega2;
    if (name == "gamma") return SweepVariable::gamma;
    throw std::invalid_argument("unknown sweep variable: " + std::string(name));
}

struct SweepSpec {
    SweepVariable variable = SweepVariable::delta_a;
    double start = -20.0;
    double stop = 20.0;
    int points = 2001;
    SystemParams base;
    double base_delta_a = 0.0;   // input detuning when it is not the swept axis
    bool with_sagnac = false;    // add interferometer/single-direction columns
};

inline void validate(const SweepSpec& spec) {
    validate(spec.base);
    if (spec.points < 2)
        throw std::invalid_argument("points must be at least 2");
    if (!(spec.start < spec.stop))
        throw std::invalid_argument("start must be less than stop");
    if (spec.variable != SweepVariable::delta_a && !std::isfinite(spec.base_delta_a))
        throw std::invalid_argument("delta_a must be finite");
}

struct SweepRow {
    double value = 0.0;
    Complex t1, t2;
    double p_elastic = 0.0;
    double p_inelastic = 0.0;
    double survival = 0.0;
    std::optional<double> fidelity;  // empty when the survival underflows
    std::optional<double> p_conversion_interferometer;
    std::optional<double> p_conversion_single_direction;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;
};

namespace detail {

inline std::pair<SystemParams, InputPhoton> sweep_point(const SweepSpec& spec,
                                                        double value) {
    SystemParams p = spec.base;
    InputPhoton in{spec.base_delta_a};
    switch (spec.variable) {
        case SweepVariable::delta_a: in.delta_a = value; break;
        case SweepVariable::delta1: p.delta1 = value; break;
        case SweepVariable::delta2: p.delta2 = value; break;
        case SweepVariable::omega1: p.omega1 = value; break;
        case SweepVariable::omega2: p.omega2 = value; break;
        case SweepVariable::gamma: p.with_dissipation(value); break;
    }
    return {p, in};
}

// Thread cap: SPFC_THREADS when set (must be a positive integer), otherwise
// the hardware concurrency.
inline unsigned sweep_threads() {
    if (const char* env = std::getenv("SPFC_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || n < 1)
            throw std::invalid_argument("SPFC_THREADS must be a positive integer");
        return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace detail

inline SweepRow evaluate_sweep_row(const SweepSpec& spec, double value) {
    const auto [p, in] = detail::sweep_point(spec, value);
    const AmplitudePair pair = amplitudes(p, in);
    SweepRow row;
    row.value = value;
    row.t1 = pair.t1;
    row.t2 = pair.t2;
    row.p_elastic = std::norm(pair.t1);
    row.p_inelastic = std::norm(pair.t2);
    row.survival = row.p_elastic + row.p_inelastic;
    row.fidelity = try_fidelity(pair);
    if (spec.with_sagnac) {
        row.p_conversion_interferometer =
            interferometer_output(pair).conversion_probability();
        row.p_conversion_single_direction =
            single_direction_output(pair).conversion_probability();
    }
    return row;
}

inline SweepResult run_sweep(const SweepSpec& spec) {
    validate(spec);
    const int n = spec.points;
    const double step = (spec.stop - spec.start) / (n - 1);

    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
        grid[i] = spec.start + step * i;
    grid.back() = spec.stop;

    SweepResult result{spec, std::vector<SweepRow>(n)};

    const unsigned threads = std::min<unsigned>(detail::sweep_threads(), n);
    if (threads <= 1 || n < 256) {
        for (int i = 0; i < n; ++i)
            result.rows[i] = evaluate_sweep_row(spec, grid[i]);
        return result;
    }

    // contiguous chunks; each worker writes a disjoint index range
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < threads; ++w) {
        const int lo = static_cast<int>(static_cast<long long>(n) * w / threads);
        const int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / threads);
        workers.emplace_back([&, lo, hi] {
            try {
                for (int i = lo; i < hi; ++i)
                    result.rows[i] = evaluate_sweep_row(spec, grid[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    workers.clear();  // join
    if (failure)
        std::rethrow_exception(failure);
    return result;
}

}  // namespace spfc
