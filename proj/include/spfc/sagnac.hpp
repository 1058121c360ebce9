#pragma once

// Composition of the emitter's loop amplitudes with the 50:50 coupler.
// State bookkeeping is done in the clockwise/counterclockwise basis; only the
// even (symmetric) superposition couples to the emitter, the odd one passes
// the loop untouched.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "spfc/amplitude.hpp"

namespace spfc {

using Mat2 = std::array<std::array<Complex, 2>, 2>;
using Vec2 = std::array<Complex, 2>;

inline Vec2 mat_vec(const Mat2& m, const Vec2& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

// 50:50 coupler, S_c = (1/sqrt(2)) [[1, 1], [1, -1]].
inline Mat2 coupler_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{{s, s}, {s, -s}}};
}

// Loop exchange S_l = [[0, 1], [1, 0]]: after a round trip the photon reaches
// the coupler port opposite to the one it left from.
inline Mat2 loop_exchange() {
    return {{{0.0, 1.0}, {1.0, 0.0}}};
}

// Emitter scattering in the clockwise/counterclockwise basis, composed with
// the loop exchange. Elastic channel: transmission (t1+1)/2, reflection
// (t1-1)/2. Inelastic channel: t2/2 into each direction.
struct LoopMatrices {
    Mat2 elastic;    // frequency k, atom back in |b>
    Mat2 inelastic;  // frequency k', atom in |c>
};

inline LoopMatrices loop_matrices(const AmplitudePair& pair) {
    const Complex t = 0.5 * (pair.t1 + 1.0);
    const Complex r = 0.5 * (pair.t1 - 1.0);
    const Complex c = 0.5 * pair.t2;
    const Mat2 exchange = loop_exchange();
    LoopMatrices lm;
    // S_l * [[t, r], [r, t]] and S_l * [[c, c], [c, c]]
    const Mat2 elastic{{{t, r}, {r, t}}};
    const Mat2 inelastic{{{c, c}, {c, c}}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            lm.elastic[i][j] = exchange[i][0] * elastic[0][j] + exchange[i][1] * elastic[1][j];
            lm.inelastic[i][j] = exchange[i][0] * inelastic[0][j] + exchange[i][1] * inelastic[1][j];
        }
    }
    return lm;
}

enum class Atom { b, c };
enum class Channel { k, k_prime };  // k' pairs with |c> by energy conservation

struct OutputAmplitude {
    Atom atom;
    Channel channel;
    int port;  // coupler port 1/2, or direction 1 = forward, 2 = backward
    Complex amplitude;
};

struct OutputState {
    std::vector<OutputAmplitude> amplitudes;

    double norm() const {
        double s = 0.0;
        for (const auto& a : amplitudes)
            s += std::norm(a.amplitude);
        return s;
    }

    double conversion_probability() const {
        double s = 0.0;
        for (const auto& a : amplitudes)
            if (a.channel == Channel::k_prime)
                s += std::norm(a.amplitude);
        return s;
    }

    Complex amplitude(Atom atom, Channel channel, int port) const {
        for (const auto& a : amplitudes)
            if (a.atom == atom && a.channel == channel && a.port == port)
                return a.amplitude;
        return {};
    }
};

// Photon injected at coupler port 1; relative_phase is an optional phase
// between the clockwise and counterclockwise loop components (0 in the ideal
// interferometer; pi prepares the odd mode and switches conversion off).
// Output per coupler port: the whole composition S_c * S_l * S_emitter * S_c.
inline OutputState interferometer_output(const AmplitudePair& pair,
                                         double relative_phase = 0.0) {
    const Mat2 coupler = coupler_matrix();
    const LoopMatrices loop = loop_matrices(pair);

    Vec2 in_loop = mat_vec(coupler, Vec2{1.0, 0.0});
    in_loop[1] *= std::exp(Complex{0.0, relative_phase});

    const Vec2 elastic_out = mat_vec(coupler, mat_vec(loop.elastic, in_loop));
    const Vec2 converted_out = mat_vec(coupler, mat_vec(loop.inelastic, in_loop));

    OutputState out;
    out.amplitudes = {
        {Atom::b, Channel::k, 1, elastic_out[0]},
        {Atom::b, Channel::k, 2, elastic_out[1]},
        {Atom::c, Channel::k_prime, 1, converted_out[0]},
        {Atom::c, Channel::k_prime, 2, converted_out[1]},
    };
    return out;
}

// Photon moving in a single direction through the loop, no coupler. Port 1 is
// the forward (transmitted) direction, port 2 the backward one. Conversion
// probability caps at |t2|^2 / 2.
inline OutputState single_direction_output(const AmplitudePair& pair) {
    const Complex t = 0.5 * (pair.t1 + 1.0);
    const Complex r = 0.5 * (pair.t1 - 1.0);
    const Complex c = 0.5 * pair.t2;

    OutputState out;
    out.amplitudes = {
        {Atom::b, Channel::k, 1, t},
        {Atom::b, Channel::k, 2, r},
        {Atom::c, Channel::k_prime, 1, c},
        {Atom::c, Channel::k_prime, 2, c},
    };
    return out;
}

// Relative phase of the converted component against the elastic one, both on
// port 1: the phi of (1/sqrt 2)(|b,1_k> + e^{i phi}|c,1_k'>) for a maximally
// entangled single-direction output.
inline double entanglement_phase(const OutputState& state) {
    const Complex elastic = state.amplitude(Atom::b, Channel::k, 1);
    const Complex converted = state.amplitude(Atom::c, Channel::k_prime, 1);
    if (std::abs(elastic) == 0.0 || std::abs(converted) == 0.0)
        throw std::domain_error("entanglement phase undefined: a component vanishes");
    return std::arg(converted) - std::arg(elastic);
}

}  // namespace spfc
