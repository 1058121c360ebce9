#pragma once

// Ground-truth path for the transport amplitudes: project the stationary
// one-excitation Schroedinger equation onto its five components and solve the
// resulting dense complex system. Deliberately independent of the closed
// forms in scattering.hpp; the two are compared only by differential tests.

#include <array>
#include <cmath>
#include <stdexcept>

#include "spfc/amplitude.hpp"
#include "spfc/params.hpp"

namespace spfc::oracle {

inline constexpr int kDim = 5;
using Matrix5 = std::array<std::array<Complex, kDim>, kDim>;
using Vector5 = std::array<Complex, kDim>;

// Unknown ordering is fixed: (t1, t2, A, F, D) for the forward problem,
// (t1, t2, D, F, A) for retrieval (the waveguide-coupled level comes third).
struct StationarySystem {
    Matrix5 matrix{};
    Vector5 rhs{};
    SystemParams params;
    InputPhoton input;
};

struct Solution {
    AmplitudePair pair;
    Complex atom_a, atom_f, atom_d;
};

namespace detail {

// Rotating-frame level coefficients relative to the total energy E = k,
// with -i*gamma_j/2 added per the non-Hermitian dissipation term:
//   omega_a  - k = Delta_a
//   omega'_f - k = Delta_a - Delta_1
//   omega'_d - k = Delta_a - Delta_1 + Delta_2
inline Complex level_a(const SystemParams& p, InputPhoton in) {
    return {in.delta_a, -0.5 * p.gamma_a};
}
inline Complex level_f(const SystemParams& p, InputPhoton in) {
    return {in.delta_a - p.delta1, -0.5 * p.gamma_f};
}
inline Complex level_d(const SystemParams& p, InputPhoton in) {
    return {in.delta_a - p.delta1 + p.delta2, -0.5 * p.gamma_d};
}

}  // namespace detail

// Five equations from H|Psi> = E|Psi> with the scattering ansatz
// B(x) = [theta(-x) + t1*theta(x)]e^{ikx}, C(x) = t2*theta(x)e^{ik'x} and
// midpoint regularization B(0) = (1+t1)/2, C(0) = t2/2:
//   row 0  jump of B(x) at the emitter:   -i(t1 - 1) + sqrt(2)g1 A      = 0
//   row 1  jump of C(x) at the emitter:   -i t2      + sqrt(2)g2 D      = 0
//   row 2  |a> amplitude:  sqrt(2)g1 (1+t1)/2 + x A + Omega1 F          = 0
//   row 3  |f> amplitude:  Omega1 A + y F + Omega2 D                    = 0
//   row 4  |d> amplitude:  sqrt(2)g2 t2/2 + Omega2 F + z D              = 0
inline StationarySystem assemble(const SystemParams& p, InputPhoton in) {
    const double g1 = std::sqrt(p.gamma1);
    const double g2 = std::sqrt(p.gamma2);
    const double sqrt2 = std::sqrt(2.0);
    const Complex mi{0.0, -1.0};

    StationarySystem s;
    s.params = p;
    s.input = in;

    // columns: t1, t2, A, F, D
    s.matrix[0][0] = mi;
    s.matrix[0][2] = sqrt2 * g1;
    s.rhs[0] = mi;

    s.matrix[1][1] = mi;
    s.matrix[1][4] = sqrt2 * g2;

    s.matrix[2][0] = 0.5 * sqrt2 * g1;
    s.matrix[2][2] = detail::level_a(p, in);
    s.matrix[2][3] = p.omega1;
    s.rhs[2] = -0.5 * sqrt2 * g1;

    s.matrix[3][2] = p.omega1;
    s.matrix[3][3] = detail::level_f(p, in);
    s.matrix[3][4] = p.omega2;

    s.matrix[4][1] = 0.5 * sqrt2 * g2;
    s.matrix[4][3] = p.omega2;
    s.matrix[4][4] = detail::level_d(p, in);

    return s;
}

// Gaussian elimination with partial pivoting. The condition estimate is the
// ratio of the largest initial entry to the smallest pivot; above 1e14 the
// parameters are treated as degenerate.
inline Vector5 solve_dense(Matrix5 m, Vector5 rhs) {
    double max_entry = 0.0;
    for (const auto& row : m)
        for (const auto& v : row)
            max_entry = std::max(max_entry, std::abs(v));

    for (int k = 0; k < kDim; ++k) {
        int pivot = k;
        double best = std::abs(m[k][k]);
        for (int i = k + 1; i < kDim; ++i) {
            if (std::abs(m[i][k]) > best) {
                best = std::abs(m[i][k]);
                pivot = i;
            }
        }
        if (pivot != k) {
            std::swap(m[k], m[pivot]);
            std::swap(rhs[k], rhs[pivot]);
        }
        if (!(best > 0.0) || max_entry / best > 1e14)
            throw std::domain_error(
                "degenerate parameters: stationary system is singular");
        for (int i = k + 1; i < kDim; ++i) {
            const Complex factor = m[i][k] / m[k][k];
            for (int j = k; j < kDim; ++j)
                m[i][j] -= factor * m[k][j];
            rhs[i] -= factor * rhs[k];
        }
    }

    Vector5 x{};
    for (int i = kDim - 1; i >= 0; --i) {
        Complex acc = rhs[i];
        for (int j = i + 1; j < kDim; ++j)
            acc -= m[i][j] * x[j];
        x[i] = acc / m[i][i];
    }
    return x;
}

inline Solution solve(const StationarySystem& s) {
    const Vector5 x = solve_dense(s.matrix, s.rhs);
    Solution sol;
    sol.pair.t1 = x[0];
    sol.pair.t2 = x[1];
    sol.atom_a = x[2];
    sol.atom_f = x[3];
    sol.atom_d = x[4];
    return sol;
}

inline Solution solve(const SystemParams& p, InputPhoton in) {
    return solve(assemble(p, in));
}

// Max-norm residual of a candidate solution, relative to the matrix norm.
inline double residual(const StationarySystem& s, const Solution& sol) {
    const Vector5 x{sol.pair.t1, sol.pair.t2, sol.atom_a, sol.atom_f, sol.atom_d};
    double norm = 0.0;
    for (const auto& row : s.matrix)
        for (const auto& v : row)
            norm = std::max(norm, std::abs(v));
    double worst = 0.0;
    for (int i = 0; i < kDim; ++i) {
        Complex acc = -s.rhs[i];
        for (int j = 0; j < kDim; ++j)
            acc += s.matrix[i][j] * x[j];
        worst = std::max(worst, std::abs(acc));
    }
    return worst / norm;
}

// Reverse process: atom initially in |c>, the stored photon re-injected at
// the matched energy k' = k - omega'_cb. The total energy is again E = k, so
// the same level coefficients appear with the two channels' roles mirrored.
//   row 0  jump of the c-channel field:  -i(t1 - 1) + sqrt(2)g2 D = 0
//   row 1  jump of the b-channel field:  -i t2      + sqrt(2)g1 A = 0
//   row 2  |d>:  sqrt(2)g2 (1+t1)/2 + z D + Omega2 F = 0
//   row 3  |f>:  Omega2 D + y F + Omega1 A           = 0
//   row 4  |a>:  sqrt(2)g1 t2/2 + Omega1 F + x A     = 0
inline StationarySystem assemble_retrieval(const SystemParams& p, InputPhoton in) {
    const double g1 = std::sqrt(p.gamma1);
    const double g2 = std::sqrt(p.gamma2);
    const double sqrt2 = std::sqrt(2.0);
    const Complex mi{0.0, -1.0};

    StationarySystem s;
    s.params = p;
    s.input = in;

    // columns: t1, t2, D, F, A
    s.matrix[0][0] = mi;
    s.matrix[0][2] = sqrt2 * g2;
    s.rhs[0] = mi;

    s.matrix[1][1] = mi;
    s.matrix[1][4] = sqrt2 * g1;

    s.matrix[2][0] = 0.5 * sqrt2 * g2;
    s.matrix[2][2] = detail::level_d(p, in);
    s.matrix[2][3] = p.omega2;
    s.rhs[2] = -0.5 * sqrt2 * g2;

    s.matrix[3][2] = p.omega2;
    s.matrix[3][3] = detail::level_f(p, in);
    s.matrix[3][4] = p.omega1;

    s.matrix[4][1] = 0.5 * sqrt2 * g1;
    s.matrix[4][3] = p.omega1;
    s.matrix[4][4] = detail::level_a(p, in);

    return s;
}

// Retrieval amplitudes: t1 = elastic (photon stays at k', atom stays |c>),
// t2 = conversion back to the original frequency k with the atom in |b>.
inline AmplitudePair solve_retrieval(const SystemParams& p, InputPhoton in) {
    const StationarySystem s = assemble_retrieval(p, in);
    const Vector5 x = solve_dense(s.matrix, s.rhs);
    return {x[0], x[1]};
}

}  // namespace spfc::oracle
