#pragma once

// CSV serialization. Floats carry 17 significant digits so a re-parse
// reproduces every value bit for bit; undefined fidelity is an empty field,
// not a zero.

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "spfc/design.hpp"
#include "spfc/figures.hpp"
#include "spfc/sweep.hpp"

namespace spfc {

inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace detail {

inline void finish_csv(std::ostream& os, std::string_view destination) {
    os.flush();
    if (!os)
        throw std::runtime_error("writing " + std::string(destination) + " failed");
}

}  // namespace detail

inline void emit_csv(const SweepResult& result, std::ostream& os,
                     std::string_view destination = "<stream>") {
    if (result.rows.empty())
        throw std::invalid_argument("refusing to serialize an empty sweep");
    os << to_string(result.spec.variable)
       << ",re_t1,im_t1,re_t2,im_t2,p_elastic,p_inelastic,survival,fidelity";
    if (result.spec.with_sagnac)
        os << ",p_conversion_interferometer,p_conversion_single_direction";
    os << '\n';
    for (const auto& row : result.rows) {
        os << format_g17(row.value) << ',' << format_g17(row.t1.real()) << ','
           << format_g17(row.t1.imag()) << ',' << format_g17(row.t2.real()) << ','
           << format_g17(row.t2.imag()) << ',' << format_g17(row.p_elastic) << ','
           << format_g17(row.p_inelastic) << ',' << format_g17(row.survival) << ',';
        if (row.fidelity)
            os << format_g17(*row.fidelity);
        if (result.spec.with_sagnac) {
            os << ',' << format_g17(*row.p_conversion_interferometer) << ','
               << format_g17(*row.p_conversion_single_direction);
        }
        os << '\n';
    }
    detail::finish_csv(os, destination);
}

inline void emit_csv(const FeasibilityMap& map, std::ostream& os,
                     std::string_view destination = "<stream>") {
    if (map.cells.empty())
        throw std::invalid_argument("refusing to serialize an empty feasibility map");
    os << "delta1,delta2,omega1_sq,omega2_sq,omega1,omega2,feasible,diagnostic\n";
    for (const auto& cell : map.cells) {
        const auto& s = cell.solution;
        os << format_g17(cell.delta1) << ',' << format_g17(cell.delta2) << ','
           << format_g17(s.omega1_sq) << ',' << format_g17(s.omega2_sq) << ',';
        if (s.feasible)
            os << format_g17(s.omega1()) << ',' << format_g17(s.omega2());
        else
            os << ',';
        os << ',' << (s.feasible ? '1' : '0') << ',' << to_string(s.diagnostic) << '\n';
    }
    detail::finish_csv(os, destination);
}

// One fidelity column per labeled configuration, on the shared detuning axis.
inline void emit_csv(const FidelityComparison& cmp, std::ostream& os,
                     std::string_view destination = "<stream>") {
    if (cmp.configs.empty())
        throw std::invalid_argument("refusing to serialize an empty comparison");
    std::vector<SweepResult> results;
    results.reserve(cmp.configs.size());
    for (const auto& spec : cmp.configs)
        results.push_back(run_sweep(spec));

    os << to_string(cmp.configs.front().variable);
    for (const auto& label : cmp.labels)
        os << ",fidelity_" << label;
    os << '\n';
    const std::size_t n = results.front().rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        os << format_g17(results.front().rows[i].value);
        for (const auto& r : results) {
            os << ',';
            if (r.rows[i].fidelity)
                os << format_g17(*r.rows[i].fidelity);
        }
        os << '\n';
    }
    detail::finish_csv(os, destination);
}

}  // namespace spfc
