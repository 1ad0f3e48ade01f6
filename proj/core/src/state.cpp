#include "gsd/state.hpp"

#include <cmath>

namespace gsd {

Qubit1::Qubit1(cplx a0, cplx a1) : c0(a0), c1(a1) {
    const double nrm = std::sqrt(std::norm(c0) + std::norm(c1));
    if (nrm < 1e-300) throw InvalidState("single-qubit state is the zero vector");
    c0 /= nrm;
    c1 /= nrm;
}

cplx inner(const Qubit1& a, const Qubit1& b) {
    return std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1;
}

Qubit1 canonical_phase(const Qubit1& q) {
    const cplx lead = std::abs(q.c0) > 1e-12 ? q.c0 : q.c1;
    const double mag = std::abs(lead);
    if (mag < 1e-300) return q;
    const cplx rot = std::conj(lead) / mag;
    Qubit1 out = q;
    out.c0 *= rot;
    out.c1 *= rot;
    return out;
}

cplx ProductState::amplitude(std::size_t index) const {
    const int nq = n();
    cplx a{1.0, 0.0};
    for (int k = 1; k <= nq; ++k) {
        const int bit = static_cast<int>((index >> (nq - k)) & 1u);
        a *= factors[k - 1][bit];
    }
    return a;
}

QubitState::QubitState(int n, std::vector<cplx> amps) : n_(n), amps_(std::move(amps)) {
    if (n_ < 1) throw InvalidState("qubit count must be >= 1");
    if (amps_.size() != (std::size_t{1} << n_))
        throw InvalidState("amplitude count does not equal 2^n");
    double sq = 0.0;
    for (const cplx& a : amps_) sq += std::norm(a);
    input_norm_ = std::sqrt(sq);
    if (input_norm_ < 1e-300) throw InvalidState("state vector is zero");
    for (cplx& a : amps_) a /= input_norm_;
}

namespace {
int deduce_n(std::size_t len) {
    int n = 0;
    while ((std::size_t{1} << n) < len) ++n;
    if ((std::size_t{1} << n) != len || n < 1)
        throw InvalidState("amplitude count is not a power of two >= 2");
    return n;
}
}  // namespace

QubitState::QubitState(std::vector<cplx> amps) : QubitState(deduce_n(amps.size()), std::move(amps)) {}

QubitState basis_state(int n, std::size_t index) {
    std::vector<cplx> amps(std::size_t{1} << n, cplx{0.0, 0.0});
    amps.at(index) = cplx{1.0, 0.0};
    return QubitState(n, std::move(amps));
}

cplx overlap(const ProductState& p, const QubitState& s) {
    if (p.n() != s.n()) throw DimensionError("product state and state have different qubit counts");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < s.dim(); ++i)
        acc += std::conj(p.amplitude(i)) * s[i];
    return acc;
}

std::array<cplx, 2> partial_contract(const ProductState& p, const QubitState& s, int k) {
    const int n = s.n();
    if (p.n() != n) throw DimensionError("product state and state have different qubit counts");
    if (k < 1 || k > n) throw IndexError("qubit index out of range");
    std::array<cplx, 2> out{cplx{0.0, 0.0}, cplx{0.0, 0.0}};
    for (std::size_t i = 0; i < s.dim(); ++i) {
        cplx w{1.0, 0.0};
        for (int j = 1; j <= n; ++j) {
            if (j == k) continue;
            w *= std::conj(p.factors[j - 1][s.bit(i, j)]);
        }
        out[s.bit(i, k)] += w * s[i];
    }
    return out;
}

Mat2 reduced_density(const QubitState& s, int k) {
    const int n = s.n();
    if (k < 1 || k > n) throw IndexError("qubit index out of range");
    Mat2 rho;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const int bi = s.bit(i, k);
        const std::size_t mask = std::size_t{1} << (n - k);
        const std::size_t j = i ^ mask;  // flip qubit k
        rho.m[bi][bi] += s[i] * std::conj(s[i]);
        rho.m[bi][s.bit(j, k)] += s[i] * std::conj(s[j]);
    }
    return rho;
}

BlochVector bloch_vector(const QubitState& s, int k) {
    const Mat2 rho = reduced_density(s, k);
    BlochVector b;
    b.x = 2.0 * rho.m[0][1].real();
    b.y = -2.0 * rho.m[0][1].imag();
    b.z = (rho.m[0][0] - rho.m[1][1]).real();
    b.norm = std::sqrt(b.x * b.x + b.y * b.y + b.z * b.z);
    return b;
}

double fidelity(const QubitState& a, const QubitState& b) {
    if (a.n() != b.n()) throw DimensionError("states have different qubit counts");
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return std::norm(acc);
}

}  // namespace gsd
