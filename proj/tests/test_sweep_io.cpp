#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <variant>

#include "spfc/csv.hpp"
#include "spfc/figures.hpp"
#include "spfc/sweep.hpp"

using namespace spfc;
using Catch::Matchers::WithinAbs;

namespace {

SweepSpec small_spec() {
    SweepSpec spec;
    spec.base.gamma1 = 2.0;
    spec.base.omega1 = 5.0 * std::sqrt(2.0);
    spec.base.omega2 = 5.0;
    spec.start = -20.0;
    spec.stop = 20.0;
    spec.points = 401;
    return spec;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("sweep validation names the offending field") {
    SweepSpec spec = small_spec();
    spec.points = 1;
    REQUIRE_THROWS_WITH(run_sweep(spec), "points must be at least 2");
    spec.points = 2;
    spec.start = 5.0;
    spec.stop = -5.0;
    REQUIRE_THROWS_WITH(run_sweep(spec), "start must be less than stop");
    spec = small_spec();
    spec.base.gamma1 = -2.0;
    REQUIRE_THROWS_WITH(run_sweep(spec), "gamma1 must be positive");
}

TEST_CASE("sweep rows are ordered and hit both endpoints") {
    const SweepResult r = run_sweep(small_spec());
    REQUIRE(r.rows.size() == 401);
    REQUIRE(r.rows.front().value == -20.0);
    REQUIRE(r.rows.back().value == 20.0);
    for (std::size_t i = 1; i < r.rows.size(); ++i)
        REQUIRE(r.rows[i - 1].value < r.rows[i].value);
}

TEST_CASE("resonant preset peaks at unity conversion on resonance") {
    const auto preset = figure_preset("fig2a");
    const SweepResult r = run_sweep(std::get<SweepSpec>(preset));
    double max_p2 = 0.0, at = -1.0;
    for (const auto& row : r.rows)
        if (row.p_inelastic > max_p2) {
            max_p2 = row.p_inelastic;
            at = row.value;
        }
    REQUIRE(at == 0.0);
    REQUIRE_THAT(max_p2, WithinAbs(1.0, 1e-12));
}

TEST_CASE("symmetric preset reaches unity off resonance as well") {
    const SweepSpec spec = std::get<SweepSpec>(figure_preset("fig2d"));
    // the sweep grid brackets the analytic roots at +-sqrt(7)
    const SweepResult r = run_sweep(spec);
    int near_unity_regions = 0;
    bool above = false;
    for (const auto& row : r.rows) {
        const bool now = row.p_inelastic > 0.999;
        if (now && !above)
            ++near_unity_regions;
        above = now;
    }
    REQUIRE(near_unity_regions == 3);  // around -sqrt(7), 0, +sqrt(7)

    // exact evaluation at the roots themselves
    for (double da : {0.0, std::sqrt(7.0), -std::sqrt(7.0)}) {
        const auto pair = amplitudes(spec.base, InputPhoton{da});
        REQUIRE_THAT(std::norm(pair.t2), WithinAbs(1.0, 1e-10));
    }
}

TEST_CASE("two-point sweep equals two independent evaluations") {
    SweepSpec spec = small_spec();
    spec.points = 2;
    spec.with_sagnac = true;
    const SweepResult r = run_sweep(spec);
    REQUIRE(r.rows.size() == 2);
    for (int i = 0; i < 2; ++i) {
        const double da = i == 0 ? spec.start : spec.stop;
        const auto pair = amplitudes(spec.base, InputPhoton{da});
        REQUIRE(r.rows[i].t1 == pair.t1);
        REQUIRE(r.rows[i].t2 == pair.t2);
        REQUIRE(r.rows[i].p_conversion_interferometer.has_value());
    }
}

TEST_CASE("sweeps over every variable kind") {
    SweepSpec spec;
    spec.base.gamma1 = 2.0;
    spec.base.omega1 = 1.0;
    spec.base.omega2 = 1.0;
    spec.base_delta_a = 0.5;
    spec.points = 11;

    for (auto variable : {SweepVariable::delta1, SweepVariable::delta2,
                          SweepVariable::omega1, SweepVariable::omega2}) {
        spec.variable = variable;
        spec.start = variable == SweepVariable::omega1 || variable == SweepVariable::omega2
                         ? 0.0
                         : -5.0;
        spec.stop = 5.0;
        const SweepResult r = run_sweep(spec);
        REQUIRE(r.rows.size() == 11);
    }

    SECTION("gamma sweep dissipates everywhere past zero") {
        spec.variable = SweepVariable::gamma;
        spec.start = 0.0;
        spec.stop = 1.0;
        const SweepResult r = run_sweep(spec);
        REQUIRE_THAT(r.rows.front().survival, WithinAbs(1.0, 1e-12));
        for (std::size_t i = 1; i < r.rows.size(); ++i)
            REQUIRE(r.rows[i].survival < 1.0);
    }
}

TEST_CASE("dissipative presets keep survival below one") {
    for (const char* name : {"fig4a", "fig4b", "fig4c"}) {
        const SweepResult r = run_sweep(std::get<SweepSpec>(figure_preset(name)));
        CAPTURE(name);
        for (const auto& row : r.rows)
            REQUIRE(row.survival < 1.0);
    }
}

TEST_CASE("figure presets carry the published constants") {
    const double sqrt2 = std::sqrt(2.0);

    const auto fig2a = std::get<SweepSpec>(figure_preset("fig2a"));
    REQUIRE(fig2a.base.gamma1 == 2.0);
    REQUIRE(fig2a.base.gamma2 == 1.0);
    REQUIRE(fig2a.base.omega1 == 5.0 * sqrt2);
    REQUIRE(fig2a.base.omega2 == 5.0);
    REQUIRE(fig2a.base.delta1 == 0.0);
    REQUIRE(fig2a.base.delta2 == 0.0);
    REQUIRE(fig2a.base.lossless());

    const auto fig2b = std::get<SweepSpec>(figure_preset("fig2b"));
    REQUIRE(fig2b.base.omega1 == 2.0 * sqrt2);
    REQUIRE(fig2b.base.omega2 == 2.0);

    const auto fig2c = std::get<SweepSpec>(figure_preset("fig2c"));
    REQUIRE(fig2c.base.omega1 == 0.5 * sqrt2);
    REQUIRE(fig2c.base.omega2 == 0.5);

    const auto fig2d = std::get<SweepSpec>(figure_preset("fig2d"));
    REQUIRE(fig2d.base.gamma1 == 1.0);
    REQUIRE(fig2d.base.omega1 == 2.0);
    REQUIRE(fig2d.base.omega2 == 2.0);

    const auto fig3a = std::get<FeasibilityRequest>(figure_preset("fig3a"));
    REQUIRE(fig3a.delta_a == 3.0);
    REQUIRE(fig3a.gamma1 == 2.0);
    REQUIRE(fig3a.gamma2 == 1.0);

    const auto fig3c = std::get<FeasibilityRequest>(figure_preset("fig3c"));
    REQUIRE(fig3c.delta1_axis.points == 1);
    REQUIRE(fig3c.delta1_axis.start == -3.0);

    const auto fig3d = std::get<FeasibilityRequest>(figure_preset("fig3d"));
    REQUIRE(fig3d.delta1_axis.start == 5.0);

    const auto fig4a = std::get<SweepSpec>(figure_preset("fig4a"));
    REQUIRE(fig4a.base.omega1 == sqrt2 / 5.0);
    REQUIRE(fig4a.base.omega2 == 0.2);
    REQUIRE(fig4a.base.gamma_a == 0.1);
    REQUIRE(fig4a.base.gamma_f == 0.1);
    REQUIRE(fig4a.base.gamma_d == 0.1);

    const auto fig4b = std::get<SweepSpec>(figure_preset("fig4b"));
    REQUIRE(fig4b.base.omega1 == 5.0 * sqrt2);
    REQUIRE(fig4b.base.omega2 == 5.0);
    REQUIRE(fig4b.base.gamma_a == 0.1);

    const auto fig4c = std::get<SweepSpec>(figure_preset("fig4c"));
    REQUIRE(fig4c.base.omega1 == std::sqrt(91.0) / 3.0);
    REQUIRE(fig4c.base.omega2 == std::sqrt(140.0) / 3.0);
    REQUIRE(fig4c.base.delta1 == -4.0);
    REQUIRE(fig4c.base.delta2 == -4.0);

    const auto fig4d = std::get<FidelityComparison>(figure_preset("fig4d"));
    REQUIRE(fig4d.configs.size() == 3);
    REQUIRE(fig4d.labels == std::vector<std::string>{"a", "b", "c"});

    REQUIRE_THROWS_AS(figure_preset("fig9z"), std::invalid_argument);
}

TEST_CASE("csv emission") {
    SECTION("two-point sweep is header plus two rows") {
        SweepSpec spec = small_spec();
        spec.points = 2;
        std::ostringstream os;
        emit_csv(run_sweep(spec), os);
        const auto lines = lines_of(os.str());
        REQUIRE(lines.size() == 3);
        REQUIRE(lines[0] ==
                "delta_a,re_t1,im_t1,re_t2,im_t2,p_elastic,p_inelastic,survival,fidelity");
    }

    SECTION("values round-trip bit exactly through the text") {
        SweepSpec spec = small_spec();
        spec.points = 64;
        spec.base.with_dissipation(0.1);
        const SweepResult r = run_sweep(spec);
        std::ostringstream os;
        emit_csv(r, os);
        const auto lines = lines_of(os.str());
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            std::istringstream row(lines[i + 1]);
            std::string field;
            std::getline(row, field, ',');
            REQUIRE(std::strtod(field.c_str(), nullptr) == r.rows[i].value);
            std::getline(row, field, ',');
            REQUIRE(std::strtod(field.c_str(), nullptr) == r.rows[i].t1.real());
            std::getline(row, field, ',');
            REQUIRE(std::strtod(field.c_str(), nullptr) == r.rows[i].t1.imag());
        }
    }

    SECTION("undefined fidelity is an empty field") {
        SweepResult r;
        r.spec = small_spec();
        SweepRow row;
        row.value = 1.0;
        row.fidelity = std::nullopt;
        r.rows.push_back(row);
        std::ostringstream os;
        emit_csv(r, os);
        const auto lines = lines_of(os.str());
        REQUIRE(lines[1].back() == ',');  // trailing empty fidelity field
    }

    SECTION("feasibility map rows carry the diagnostic code") {
        const FeasibilityMap map = feasibility_map(
            GridAxis::fixed(-4.0), GridAxis{-4.0, 4.0, 2}, 2.0, 1.0, 3.0);
        std::ostringstream os;
        emit_csv(map, os);
        const auto lines = lines_of(os.str());
        REQUIRE(lines.size() == 3);
        REQUIRE(lines[0] ==
                "delta1,delta2,omega1_sq,omega2_sq,omega1,omega2,feasible,diagnostic");
        REQUIRE(lines[1].find(",1,ok") != std::string::npos);
    }

    SECTION("empty results are refused") {
        SweepResult r;
        r.spec = small_spec();
        std::ostringstream os;
        REQUIRE_THROWS_AS(emit_csv(r, os), std::invalid_argument);
    }
}

TEST_CASE("thread cap does not change results") {
    SweepSpec spec = small_spec();
    spec.points = 1024;  // large enough to take the parallel path
    spec.base.with_dissipation(0.05);

    setenv("SPFC_THREADS", "1", 1);
    const SweepResult serial = run_sweep(spec);
    setenv("SPFC_THREADS", "4", 1);
    const SweepResult parallel = run_sweep(spec);
    unsetenv("SPFC_THREADS");

    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
        REQUIRE(serial.rows[i].value == parallel.rows[i].value);
        REQUIRE(serial.rows[i].t1 == parallel.rows[i].t1);
        REQUIRE(serial.rows[i].t2 == parallel.rows[i].t2);
    }

    SECTION("invalid thread cap is rejected") {
        setenv("SPFC_THREADS", "zero", 1);
        REQUIRE_THROWS_WITH(run_sweep(spec),
                            "SPFC_THREADS must be a positive integer");
        setenv("SPFC_THREADS", "0", 1);
        REQUIRE_THROWS_AS(run_sweep(spec), std::invalid_argument);
        unsetenv("SPFC_THREADS");
    }
}

TEST_CASE("fidelity comparison aligns three curves on one axis") {
    const auto fig4d = std::get<FidelityComparison>(figure_preset("fig4d"));
    FidelityComparison trimmed = fig4d;
    for (auto& spec : trimmed.configs)
        spec.points = 41;
    std::ostringstream os;
    emit_csv(trimmed, os);
    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 42);
    REQUIRE(lines[0] == "delta_a,fidelity_a,fidelity_b,fidelity_c");
    // every row: axis value plus three populated fidelity fields
    for (std::size_t i = 1; i < lines.size(); ++i)
        REQUIRE(std::count(lines[i].begin(), lines[i].end(), ',') == 3);
}
