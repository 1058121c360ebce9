#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <random>
#include <string>

#include "spfc/oracle.hpp"

using namespace spfc;
using Catch::Matchers::WithinAbs;

namespace {

SystemParams draw(std::mt19937_64& rng, bool lossy) {
    auto u = [&rng](double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(rng);
    };
    SystemParams p;
    p.gamma1 = std::exp(u(std::log(0.1), std::log(10.0)));
    p.gamma2 = 1.0;
    p.omega1 = u(0.0, 10.0);
    p.omega2 = u(0.0, 10.0);
    p.delta1 = u(-10.0, 10.0);
    p.delta2 = u(-10.0, 10.0);
    if (lossy) {
        p.gamma_a = u(0.0, 1.0);
        p.gamma_f = u(0.0, 1.0);
        p.gamma_d = u(0.0, 1.0);
    }
    return p;
}

}  // namespace

TEST_CASE("assembled system has the documented sparsity") {
    SystemParams p;
    p.gamma1 = 2.0;
    p.omega1 = 1.5;
    p.omega2 = 0.5;
    p.delta1 = -1.0;
    p.delta2 = 2.0;
    const auto s = oracle::assemble(p, InputPhoton{0.3});

    // jump rows touch {t1, A} and {t2, D} only
    const bool mask[5][5] = {
        {true, false, true, false, false},   // B-field jump
        {false, true, false, false, true},   // C-field jump
        {true, false, true, true, false},    // |a>
        {false, false, true, true, true},    // |f>
        {false, true, false, true, true},    // |d>
    };
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            CAPTURE(i, j);
            REQUIRE((std::abs(s.matrix[i][j]) != 0.0) == mask[i][j]);
        }
    REQUIRE(s.rhs[0] == Complex(0.0, -1.0));
    REQUIRE(s.rhs[1] == Complex(0.0, 0.0));
}

TEST_CASE("decoupled drives give zero conversion") {
    SystemParams p;
    p.gamma1 = 1.7;
    const auto sol = oracle::solve(p, InputPhoton{0.9});
    REQUIRE_THAT(std::abs(sol.pair.t2), WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(std::abs(sol.pair.t1), WithinAbs(1.0, 1e-12));
}

TEST_CASE("two-level point solves to the quarter turn") {
    SystemParams p;  // omega1 = 0 leaves a bare two-level atom
    p.omega2 = 3.7;
    p.delta1 = 0.4;
    p.delta2 = -2.2;
    const auto sol = oracle::solve(p, InputPhoton{1.0});
    REQUIRE_THAT(std::abs(sol.pair.t1 - Complex{0.0, 1.0}), WithinAbs(0.0, 1e-12));
}

TEST_CASE("resonant design point nulls the elastic amplitude") {
    SystemParams p;
    p.gamma1 = 2.0;
    p.omega1 = 5.0 * std::sqrt(2.0);
    p.omega2 = 5.0;
    const auto sol = oracle::solve(p, InputPhoton{0.0});
    REQUIRE_THAT(std::abs(sol.pair.t1), WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(std::abs(sol.pair.t2), WithinAbs(1.0, 1e-12));
}

TEST_CASE("detuned design point converts completely") {
    SystemParams p;
    p.gamma1 = 2.0;
    p.omega1 = std::sqrt(91.0) / 3.0;
    p.omega2 = std::sqrt(140.0) / 3.0;
    p.delta1 = -4.0;
    p.delta2 = -4.0;
    const auto sol = oracle::solve(p, InputPhoton{3.0});
    REQUIRE_THAT(std::abs(sol.pair.t2), WithinAbs(1.0, 1e-12));

    SECTION("and retrieves completely") {
        const auto retr = oracle::solve_retrieval(p, InputPhoton{3.0});
        REQUIRE_THAT(std::abs(retr.t2), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("lossless solutions are unitary") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> da(-20.0, 20.0);
    for (int i = 0; i < 2000; ++i) {
        const SystemParams p = draw(rng, false);
        const auto sol = oracle::solve(p, InputPhoton{da(rng)});
        REQUIRE_THAT(sol.pair.survival(), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("solutions satisfy the assembled equations") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> da(-20.0, 20.0);
    for (int i = 0; i < 2000; ++i) {
        const SystemParams p = draw(rng, true);
        const auto system = oracle::assemble(p, InputPhoton{da(rng)});
        const auto sol = oracle::solve(system);
        REQUIRE(oracle::residual(system, sol) < 1e-12);
    }
}

TEST_CASE("retrieval solve mirrors the forward one on symmetric parameters") {
    SystemParams p;
    p.omega1 = p.omega2 = 1.5;
    p.delta1 = p.delta2 = 2.0;
    const InputPhoton in{0.7};
    const auto fwd = oracle::solve(p, in);
    const auto retr = oracle::solve_retrieval(p, in);
    REQUIRE_THAT(std::abs(fwd.pair.t1 - retr.t1), WithinAbs(0.0, 1e-12));
    REQUIRE_THAT(std::abs(fwd.pair.t2 - retr.t2), WithinAbs(0.0, 1e-12));
}

TEST_CASE("retrieval amplitude magnitude matches the forward conversion") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> da(-20.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
        const SystemParams p = draw(rng, false);
        const InputPhoton in{da(rng)};
        const auto fwd = oracle::solve(p, in);
        const auto retr = oracle::solve_retrieval(p, in);
        REQUIRE_THAT(std::abs(retr.t2), WithinAbs(std::abs(fwd.pair.t2), 1e-10));
    }
}

TEST_CASE("degenerate parameters raise instead of propagating garbage") {
    // drives off and the photon on the bare two-photon resonance: the |f>
    // row vanishes entirely
    SystemParams p;
    p.delta1 = 1.0;
    REQUIRE_THROWS_AS(oracle::solve(p, InputPhoton{1.0}), std::domain_error);
}

TEST_CASE("oracle and closed forms stay out of each other's code") {
    auto read = [](const std::string& path) {
        std::ifstream in(path);
        REQUIRE(in);
        return std::string(std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>());
    };
    const std::string base = SPFC_INCLUDE_DIR "/spfc/";
    REQUIRE(read(base + "oracle.hpp").find("#include \"spfc/scattering.hpp\"") ==
            std::string::npos);
    REQUIRE(read(base + "scattering.hpp").find("#include \"spfc/oracle.hpp\"") ==
            std::string::npos);
}
