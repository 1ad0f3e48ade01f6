#pragma once

// State algebra for n-qubit pure states: amplitudes, overlaps, partial
// contractions, reduced density matrices and Bloch vectors.
//
// Index convention used throughout: qubit 1 is the most significant bit of
// the computational basis index, so for an n-qubit state the bit of qubit k
// in basis index i is (i >> (n - k)) & 1.

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "gsd/errors.hpp"

namespace gsd {

using cplx = std::complex<double>;

// Central tolerance defaults. Operations take these as defaulted arguments
// so tests can tighten or loosen them in one place.
struct Tolerances {
    double norm = 1e-12;       // normalization / orthogonality checks
    double residual = 1e-10;   // stationarity residual
    double gauge_zero = 1e-9;  // coefficient treated as zero during gauge fixing
    double support = 1e-9;     // zero-pattern (single-p, intermediate) checks
    double predicate = 1e-7;   // theorem predicates evaluated on solver output
    double region = 1e-9;      // closed-form region boundary band
};

inline const Tolerances& default_tols() {
    static const Tolerances t{};
    return t;
}

// A single-qubit pure state. The constructor normalizes, so instances are
// unit vectors; a zero input is rejected.
struct Qubit1 {
    cplx c0{1.0, 0.0};
    cplx c1{0.0, 0.0};

    Qubit1() = default;
    Qubit1(cplx a0, cplx a1);

    cplx operator[](int bit) const { return bit ? c1 : c0; }
};

// <a|b>
cplx inner(const Qubit1& a, const Qubit1& b);

// Rotate so the first component of magnitude > 1e-12 is real positive.
Qubit1 canonical_phase(const Qubit1& q);

// A complete product state |q_1 q_2 ... q_n>.
struct ProductState {
    std::vector<Qubit1> factors;

    ProductState() = default;
    explicit ProductState(std::vector<Qubit1> f) : factors(std::move(f)) {}

    int n() const { return static_cast<int>(factors.size()); }

    // Amplitude of the computational basis state `index`.
    cplx amplitude(std::size_t index) const;
};

// An n-qubit pure state vector. Constructors normalize the amplitudes and
// keep the pre-normalization norm around for diagnostics.
class QubitState {
  public:
    QubitState(int n, std::vector<cplx> amps);
    explicit QubitState(std::vector<cplx> amps);  // n deduced from the length

    int n() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amps() const { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[i]; }
    double input_norm() const { return input_norm_; }

    // Bit of qubit k (1-based) in basis index i.
    int bit(std::size_t i, int k) const { return static_cast<int>((i >> (n_ - k)) & 1u); }

  private:
    int n_;
    std::vector<cplx> amps_;
    double input_norm_;
};

QubitState basis_state(int n, std::size_t index);

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double norm = 0.0;
};

// 2x2 complex matrix, row major.
struct Mat2 {
    std::array<std::array<cplx, 2>, 2> m{};

    cplx trace() const { return m[0][0] + m[1][1]; }
};

// <q_1 q_2 ... q_n | psi>
cplx overlap(const ProductState& p, const QubitState& s);

// <q_1 ... q_{k-1} q_{k+1} ... q_n | psi>, a 2-component vector on qubit k.
// Contracting it with p.factors[k-1] reproduces overlap(p, s).
std::array<cplx, 2> partial_contract(const ProductState& p, const QubitState& s, int k);

// One-qubit reduced density matrix of qubit k.
Mat2 reduced_density(const QubitState& s, int k);

// Pauli expectation values of reduced_density(s, k).
BlochVector bloch_vector(const QubitState& s, int k);

// |<a|b>|^2
double fidelity(const QubitState& a, const QubitState& b);

}  // namespace gsd
