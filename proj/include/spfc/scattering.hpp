#pragma once

// Closed-form transport amplitudes of the five-level emitter coupled to the
// waveguide loop, the documented limit reductions, and the retrieval
// involution. Intrinsic dissipation enters through complex detunings,
// x -> x - i*gamma/2 per excited level, which reproduces the quantum-jump
// non-Hermitian Hamiltonian term by term.

#include <cmath>
#include <stdexcept>
#include <utility>

#include "spfc/amplitude.hpp"
#include "spfc/params.hpp"

namespace spfc {

inline constexpr double kPoleFloor = 1e-300;

namespace detail {

// The three detuning factors entering every term:
//   x = Delta_a, y = Delta_a - Delta_1, z = Delta_a - Delta_1 + Delta_2,
// shifted by -i*gamma/2 of the excited level each one belongs to (a, f, d).
struct DetuningFactors {
    Complex x, y, z;
};

inline DetuningFactors detuning_factors(const SystemParams& p, InputPhoton in) {
    const Complex half_i{0.0, 0.5};
    DetuningFactors f;
    f.x = in.delta_a - half_i * p.gamma_a;
    f.y = (in.delta_a - p.delta1) - half_i * p.gamma_f;
    f.z = (in.delta_a - p.delta1 + p.delta2) - half_i * p.gamma_d;
    return f;
}

inline Complex numerator_a(const DetuningFactors& d, const SystemParams& p) {
    const double o1s = p.omega1 * p.omega1;
    const double o2s = p.omega2 * p.omega2;
    const Complex real_part = d.x * d.y * d.z - o2s * d.x
                            + p.gamma1 * p.gamma2 * d.y - o1s * d.z;
    const Complex imag_part = p.gamma1 * d.y * d.z - p.gamma2 * d.x * d.y
                            - o2s * p.gamma1 + o1s * p.gamma2;
    return real_part + Complex{0.0, 1.0} * imag_part;
}

inline Complex denominator_b(const DetuningFactors& d, const SystemParams& p) {
    const double o1s = p.omega1 * p.omega1;
    const double o2s = p.omega2 * p.omega2;
    const Complex real_part = d.x * d.y * d.z - o2s * d.x
                            - p.gamma1 * p.gamma2 * d.y - o1s * d.z;
    const Complex imag_part = p.gamma1 * d.y * d.z + p.gamma2 * d.x * d.y
                            - o2s * p.gamma1 - o1s * p.gamma2;
    return real_part - Complex{0.0, 1.0} * imag_part;
}

}  // namespace detail

// t1 = A/B, t2 = 2i*sqrt(Gamma1*Gamma2)*Omega1*Omega2 / B.
// Throws std::domain_error when B vanishes (degenerate parameter set, e.g.
// both drives off with the photon exactly on the two-photon resonance).
inline AmplitudePair amplitudes(const SystemParams& p, InputPhoton in) {
    const auto d = detail::detuning_factors(p, in);
    const Complex a = detail::numerator_a(d, p);
    const Complex b = detail::denominator_b(d, p);
    if (std::abs(b) < kPoleFloor)
        throw std::domain_error("transport pole: B = 0 for this parameter set");
    AmplitudePair pair;
    pair.t1 = a / b;
    pair.t2 = Complex{0.0, 2.0} * std::sqrt(p.gamma1 * p.gamma2)
            * p.omega1 * p.omega2 / b;
    return pair;
}

// Omega_1 = 0 reduction: the d<->c channel decouples and the emitter acts as
// a bare two-level atom, t1 = (Delta_a + i*Gamma_1)/(Delta_a - i*Gamma_1).
// Gamma_1 appears in both numerator and denominator; this is what the exact
// factorization of A and B gives, and it keeps |t1| = 1.
inline Complex two_level_transmission(double gamma1, double delta_a) {
    const Complex ig{0.0, gamma1};
    return (delta_a + ig) / (delta_a - ig);
}

// Omega_2 = 0 reduction: a driven lambda system,
// t1 = [x*y - Omega_1^2 + i*y*Gamma_1] / [x*y - Omega_1^2 - i*y*Gamma_1].
inline Complex lambda_transmission(double gamma1, double omega1,
                                   double delta1, double delta_a) {
    const double y = delta_a - delta1;
    const double re = delta_a * y - omega1 * omega1;
    const Complex num{re, y * gamma1};
    const Complex den{re, -y * gamma1};
    if (std::abs(den) < kPoleFloor)
        throw std::domain_error("transport pole in lambda reduction");
    return num / den;
}

// Retrieval involution sigma: scattering with the atom initially in |c> and
// the stored photon re-injected at the matched energy is described by the
// same closed forms with the two transitions' roles exchanged:
//   (G1,G2), (O1,O2), (D1,D2), (gamma_a,gamma_d) swap;
//   Delta_a -> Delta_a - Delta_1 + Delta_2.
inline std::pair<SystemParams, InputPhoton> retrieval_map(const SystemParams& p,
                                                          InputPhoton in) {
    SystemParams r = p;
    std::swap(r.gamma1, r.gamma2);
    std::swap(r.omega1, r.omega2);
    std::swap(r.delta1, r.delta2);
    std::swap(r.gamma_a, r.gamma_d);
    InputPhoton rin{in.delta_a - p.delta1 + p.delta2};
    return {r, rin};
}

}  // namespace spfc
