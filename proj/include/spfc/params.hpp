#pragma once

// Physical parameter records and frequency bookkeeping for the five-level
// emitter in a waveguide loop. All rates and detunings are dimensionless
// multiples of the reference decay rate Gamma_2 (gamma2 = 1 by convention);
// hbar = 1 and the group velocity v_g = 1, so frequency equals wave number.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace spfc {

// Level scheme: |b>, |c> long-lived; |a>, |d>, |f> excited.
// Waveguide couples a<->b (Gamma_1) and d<->c (Gamma_2); classical drives
// couple a<->f (Omega_1, detuning Delta_1) and d<->f (Omega_2, Delta_2).
struct SystemParams {
    double gamma1 = 1.0;   // decay rate of a<->b into the loop
    double gamma2 = 1.0;   // decay rate of d<->c into the loop (reference)
    double omega1 = 0.0;   // Rabi frequency of drive L1
    double omega2 = 0.0;   // Rabi frequency of drive L2
    double delta1 = 0.0;   // Delta_1 = omega_af - omega_L1
    double delta2 = 0.0;   // Delta_2 = omega_df - omega_L2
    double gamma_a = 0.0;  // intrinsic dissipation of |a>
    double gamma_f = 0.0;  // intrinsic dissipation of |f>
    double gamma_d = 0.0;  // intrinsic dissipation of |d>

    bool lossless() const {
        return gamma_a == 0.0 && gamma_f == 0.0 && gamma_d == 0.0;
    }

    // Single-scalar dissipation convention: gamma_a = gamma_f = gamma_d = g.
    SystemParams& with_dissipation(double g) {
        gamma_a = gamma_f = gamma_d = g;
        return *this;
    }

    bool operator==(const SystemParams&) const = default;
};

// Input photon, described by its detuning from the a<->b transition:
// Delta_a = omega_a - k.
struct InputPhoton {
    double delta_a = 0.0;
};

// Checks every invariant and returns the record unchanged, or throws
// std::invalid_argument naming the first violated field.
inline SystemParams validate(const SystemParams& p) {
    auto positive = [](double v, const char* name) {
        if (!(std::isfinite(v) && v > 0.0))
            throw std::invalid_argument(std::string(name) + " must be positive");
    };
    auto nonnegative = [](double v, const char* name) {
        if (!(std::isfinite(v) && v >= 0.0))
            throw std::invalid_argument(std::string(name) + " must be nonnegative");
    };
    auto finite = [](double v, const char* name) {
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(name) + " must be finite");
    };
    positive(p.gamma1, "gamma1");
    positive(p.gamma2, "gamma2");
    nonnegative(p.omega1, "omega1");
    nonnegative(p.omega2, "omega2");
    finite(p.delta1, "delta1");
    finite(p.delta2, "delta2");
    nonnegative(p.gamma_a, "gamma_a");
    nonnegative(p.gamma_f, "gamma_f");
    nonnegative(p.gamma_d, "gamma_d");
    return p;
}

inline InputPhoton validate(const InputPhoton& in) {
    if (!std::isfinite(in.delta_a))
        throw std::invalid_argument("delta_a must be finite");
    return in;
}

// Bare level frequencies plus drive-laser frequencies, in one common
// (arbitrary) frequency unit. The drives shift the levels into the rotating
// frame: omega'_f = omega_f + omega_L1, omega'_d/c = omega_d/c + (L1 - L2).
struct LevelDiagram {
    double omega_a = 0.0;
    double omega_b = 0.0;
    double omega_c = 0.0;
    double omega_d = 0.0;
    double omega_f = 0.0;
    double omega_L1 = 0.0;
    double omega_L2 = 0.0;

    double dressed_f() const { return omega_f + omega_L1; }
    double dressed_d() const { return omega_d + (omega_L1 - omega_L2); }
    double dressed_c() const { return omega_c + (omega_L1 - omega_L2); }

    double omega_cb() const { return omega_c - omega_b; }
    // Effective c-b splitting in the rotating frame.
    double dressed_cb() const { return omega_cb() + (omega_L1 - omega_L2); }

    double delta1() const { return (omega_a - omega_f) - omega_L1; }
    double delta2() const { return (omega_d - omega_f) - omega_L2; }

    // Input photon at absolute frequency omega -> detuning from a<->b.
    InputPhoton photon_at(double omega_in) const { return {omega_a - omega_in}; }

    bool operator==(const LevelDiagram&) const = default;
};

inline LevelDiagram validate(const LevelDiagram& d) {
    auto finite = [](double v, const char* name) {
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(name) + " must be finite");
    };
    finite(d.omega_a, "omega_a");
    finite(d.omega_b, "omega_b");
    finite(d.omega_c, "omega_c");
    finite(d.omega_d, "omega_d");
    finite(d.omega_f, "omega_f");
    finite(d.omega_L1, "omega_L1");
    finite(d.omega_L2, "omega_L2");
    return d;
}

enum class ConversionKind { up, down, degenerate };

struct OutputFrequency {
    double value = 0.0;  // omega' of the inelastically scattered photon
    double shift = 0.0;  // omega_in - omega' = omega_cb + (omega_L1 - omega_L2)
    ConversionKind kind = ConversionKind::degenerate;
};

// Energy conservation for the inelastic channel:
// omega' = omega_in - [omega_cb + (omega_L1 - omega_L2)].
inline OutputFrequency output_frequency(double omega_in, const LevelDiagram& d) {
    const double shift = d.dressed_cb();
    OutputFrequency out;
    out.shift = shift;
    out.value = omega_in - shift;
    if (shift > 0.0)
        out.kind = ConversionKind::down;
    else if (shift < 0.0)
        out.kind = ConversionKind::up;
    else
        out.kind = ConversionKind::degenerate;
    return out;
}

// Retrieval bookkeeping: the stored photon comes back out when the roles of
// |b> and |c| (and of the two drives) are exchanged.
inline LevelDiagram retrieval_diagram(const LevelDiagram& d) {
    LevelDiagram r = d;
    std::swap(r.omega_b, r.omega_c);
    std::swap(r.omega_L1, r.omega_L2);
    std::swap(r.omega_a, r.omega_d);
    return r;
}

}  // namespace spfc
