#pragma once

// Shared transport-amplitude types. Both the closed-form evaluator and the
// linear-system oracle produce these; neither includes the other.

#include <complex>
#include <optional>
#include <stdexcept>

namespace spfc {

using Complex = std::complex<double>;

// Elastic amplitude t1 (photon keeps frequency k, atom back in |b>) and
// inelastic amplitude t2 (photon converted to k', atom in |c>).
// Lossless parameters give |t1|^2 + |t2|^2 = 1; dissipation makes the sum
// strictly smaller.
struct AmplitudePair {
    Complex t1;
    Complex t2;

    double survival() const { return std::norm(t1) + std::norm(t2); }
};

struct ConversionMetrics {
    double p_elastic = 0.0;    // |t1|^2
    double p_inelastic = 0.0;  // |t2|^2
    double survival = 0.0;     // |t1|^2 + |t2|^2
    double fidelity = 0.0;     // |t2|^2 / (|t1|^2 + |t2|^2)
};

// The fidelity conditions on the photon surviving dissipation; it is
// undefined once the total surviving probability underflows.
inline constexpr double kSurvivalFloor = 1e-300;

inline std::optional<double> try_fidelity(const AmplitudePair& pair) {
    const double s = pair.survival();
    if (s < kSurvivalFloor)
        return std::nullopt;
    return std::norm(pair.t2) / s;
}

inline ConversionMetrics metrics(const AmplitudePair& pair) {
    ConversionMetrics m;
    m.p_elastic = std::norm(pair.t1);
    m.p_inelastic = std::norm(pair.t2);
    m.survival = m.p_elastic + m.p_inelastic;
    const auto f = try_fidelity(pair);
    if (!f)
        throw std::domain_error("fidelity undefined: surviving probability underflows");
    m.fidelity = *f;
    return m;
}

}  // namespace spfc
