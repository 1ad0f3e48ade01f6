#pragma once

// Shared test utilities: random states, random local unitaries.

#include <array>
#include <random>

#include "gsd/state.hpp"

namespace gsd::test {

inline QubitState random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> amps(std::size_t{1} << n);
    for (auto& a : amps) a = cplx{gauss(rng), gauss(rng)};
    return QubitState(n, std::move(amps));
}

// Haar-ish random 2x2 unitary: Gram-Schmidt on two Gaussian columns.
inline std::array<std::array<cplx, 2>, 2> random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    cplx a{gauss(rng), gauss(rng)}, b{gauss(rng), gauss(rng)};
    double nrm = std::sqrt(std::norm(a) + std::norm(b));
    a /= nrm;
    b /= nrm;
    // second column orthogonal to (a, b)
    const cplx c = -std::conj(b), d = std::conj(a);
    return {{{a, c}, {b, d}}};
}

// Apply a single-qubit unitary (column-major u[row][col]) to qubit k.
inline QubitState apply_local_unitary(const QubitState& s, int k,
                                      const std::array<std::array<cplx, 2>, 2>& u) {
    std::vector<cplx> amps(s.dim());
    const std::size_t mask = std::size_t{1} << (s.n() - k);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const std::size_t i0 = i & ~mask, i1 = i | mask;
        const int row = (i & mask) ? 1 : 0;
        amps[i] = u[row][0] * s[i0] + u[row][1] * s[i1];
    }
    return QubitState(s.n(), std::move(amps));
}

inline QubitState random_lu_image(const QubitState& s, std::mt19937_64& rng) {
    QubitState out = s;
    for (int k = 1; k <= s.n(); ++k) out = apply_local_unitary(out, k, random_unitary(rng));
    return out;
}

}  // namespace gsd::test
