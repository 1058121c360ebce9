#pragma once

// Differential verification: random parameter draws evaluated through both
// the closed forms and the linear-system oracle, plus the invariants that
// must hold on every draw (unitarity, oracle residual, retrieval
// reciprocity, Sagnac composition identities). This is the one place where
// both computation paths meet.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "spfc/oracle.hpp"
#include "spfc/sagnac.hpp"
#include "spfc/scattering.hpp"

namespace spfc {

struct VerifyOptions {
    long draws = 10000;
    std::uint64_t seed = 42;
    double tolerance = 1e-10;  // closed-form vs oracle amplitude deviation
};

// Fixed bounds of the per-draw invariants (independent of --tolerance).
inline constexpr double kUnitarityBound = 1e-12;
inline constexpr double kResidualBound = 1e-12;
inline constexpr double kReciprocityBound = 1e-10;
inline constexpr double kCompositionBound = 1e-12;

struct VerifyReport {
    long draws = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;

    double max_forward_deviation = 0.0;    // |t_closed - t_oracle|, lossy and lossless
    double max_retrieval_deviation = 0.0;  // involution closed form vs mirrored oracle
    double max_unitarity_defect = 0.0;     // lossless, both paths
    double max_residual = 0.0;             // oracle back-substitution, relative
    double max_reciprocity_defect = 0.0;   // lossless ||t2(sigma p)| - |t2(p)||
    double max_composition_defect = 0.0;   // Sagnac probability identities
    double max_theta_pi_conversion = 0.0;  // odd-mode input must not convert
    double max_lossy_survival = 0.0;       // must stay below 1
    double elapsed_seconds = 0.0;

    bool passed() const {
        return max_forward_deviation < tolerance &&
               max_retrieval_deviation < tolerance &&
               max_unitarity_defect < kUnitarityBound &&
               max_residual < kResidualBound &&
               max_reciprocity_defect < kReciprocityBound &&
               max_composition_defect < kCompositionBound &&
               max_theta_pi_conversion < kCompositionBound &&
               max_lossy_survival < 1.0;
    }
};

namespace detail {

// Deterministic uniform draws: the raw 64-bit stream is mapped to doubles
// explicitly so the sequence does not depend on the standard library's
// distribution implementations.
class DrawStream {
public:
    explicit DrawStream(std::uint64_t seed) : state_(seed) {}

    double uniform(double lo, double hi) {
        const double u = (next() >> 11) * 0x1.0p-53;  // [0, 1)
        return lo + u * (hi - lo);
    }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

private:
    // SplitMix64 step
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

inline SystemParams draw_params(DrawStream& rng) {
    SystemParams p;
    p.gamma1 = rng.log_uniform(0.1, 10.0);
    p.gamma2 = 1.0;
    p.omega1 = rng.uniform(0.0, 10.0);
    p.omega2 = rng.uniform(0.0, 10.0);
    p.delta1 = rng.uniform(-10.0, 10.0);
    p.delta2 = rng.uniform(-10.0, 10.0);
    p.gamma_a = rng.uniform(0.0, 1.0);
    p.gamma_f = rng.uniform(0.0, 1.0);
    p.gamma_d = rng.uniform(0.0, 1.0);
    return p;
}

inline double pair_deviation(const AmplitudePair& a, const AmplitudePair& b) {
    return std::max(std::abs(a.t1 - b.t1), std::abs(a.t2 - b.t2));
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    detail::DrawStream rng(opt.seed);

    VerifyReport rep;
    rep.draws = opt.draws;
    rep.seed = opt.seed;
    rep.tolerance = opt.tolerance;

    for (long i = 0; i < opt.draws; ++i) {
        const SystemParams lossy = detail::draw_params(rng);
        const InputPhoton in{rng.uniform(-20.0, 20.0)};

        // closed form vs oracle, with dissipation
        const AmplitudePair closed = amplitudes(lossy, in);
        const auto orc = oracle::solve(lossy, in);
        rep.max_forward_deviation = std::max(
            rep.max_forward_deviation, detail::pair_deviation(closed, orc.pair));
        rep.max_residual =
            std::max(rep.max_residual, oracle::residual(oracle::assemble(lossy, in), orc));
        rep.max_lossy_survival = std::max(rep.max_lossy_survival, closed.survival());

        // retrieval: parameter involution vs independently mirrored system
        const auto [sigma_p, sigma_in] = retrieval_map(lossy, in);
        const AmplitudePair closed_retr = amplitudes(sigma_p, sigma_in);
        const AmplitudePair oracle_retr = oracle::solve_retrieval(lossy, in);
        rep.max_retrieval_deviation = std::max(
            rep.max_retrieval_deviation, detail::pair_deviation(closed_retr, oracle_retr));

        // lossless copy: unitarity, reciprocity, and the Sagnac identities
        SystemParams lossless = lossy;
        lossless.with_dissipation(0.0);
        const AmplitudePair closed0 = amplitudes(lossless, in);
        const auto orc0 = oracle::solve(lossless, in);
        rep.max_forward_deviation = std::max(
            rep.max_forward_deviation, detail::pair_deviation(closed0, orc0.pair));
        rep.max_unitarity_defect =
            std::max({rep.max_unitarity_defect, std::abs(closed0.survival() - 1.0),
                      std::abs(orc0.pair.survival() - 1.0)});

        const auto [sigma_p0, sigma_in0] = retrieval_map(lossless, in);
        const AmplitudePair closed0_retr = amplitudes(sigma_p0, sigma_in0);
        rep.max_reciprocity_defect =
            std::max(rep.max_reciprocity_defect,
                     std::abs(std::abs(closed0_retr.t2) - std::abs(closed0.t2)));

        const double p2 = std::norm(closed0.t2);
        rep.max_composition_defect = std::max(
            {rep.max_composition_defect,
             std::abs(interferometer_output(closed0).conversion_probability() - p2),
             std::abs(single_direction_output(closed0).conversion_probability() - 0.5 * p2)});
        rep.max_theta_pi_conversion =
            std::max(rep.max_theta_pi_conversion,
                     interferometer_output(closed0, std::numbers::pi).conversion_probability());
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace spfc
