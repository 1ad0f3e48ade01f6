#pragma once

// Construction of the generalized Schmidt decomposition: orthonormal
// product basis from a stationary product state, coefficient expansion,
// and phase gauge fixing so that g and every t_k are real nonnegative and
// the phase of the all-p coefficient lies in [-pi/(n-1), pi/(n-1)].

#include <cstddef>
#include <vector>

#include "gsd/solver.hpp"
#include "gsd/state.hpp"

namespace gsd {

// (-conj(c1), conj(c0)) followed by the canonical phase convention.
Qubit1 orthogonal_complement(const Qubit1& x);

struct GsdBasis {
    std::vector<Qubit1> q;
    std::vector<Qubit1> p;

    int n() const { return static_cast<int>(q.size()); }

    // Product state for a bit pattern, 0 = q_k, 1 = p_k (qubit 1 = MSB).
    ProductState pattern(std::size_t bits) const;
};

GsdBasis make_basis(std::vector<Qubit1> q_factors);

// Coefficients c_b = <b|psi> over all 2^n basis patterns.
std::vector<cplx> expand(const QubitState& s, const GsdBasis& basis);

struct GsdDecomposition {
    GsdBasis basis;
    std::vector<cplx> coeffs;  // pattern-indexed, 0 = q / 1 = p, qubit 1 = MSB
    double g = 0.0;
    std::vector<double> t;     // t[k-1] >= 0
    double h = 0.0;
    double phi = 0.0;          // radians, in [-pi/(n-1), pi/(n-1)]
    SeqEigenpair solver;       // metadata from the dominant-eigenvector search
    bool gauge_degenerate = false;  // some t_k (or h) vanished; free phases canonicalized

    int n() const { return basis.n(); }
    std::size_t t_index(int k) const;  // pattern with q only at position k
    std::size_t h_index() const { return coeffs.size() - 1; }

    QubitState reconstruct() const;

    // Largest magnitude among coefficients whose pattern has exactly one p.
    double max_single_p() const;
    // Largest magnitude among patterns with >= 2 p's that are neither a
    // t-pattern nor the all-p pattern (empty for n = 3).
    double max_intermediate() const;
};

struct GaugeResult {
    std::vector<cplx> coeffs;
    std::vector<double> theta;  // applied p_k phase rotations
    double global_phase = 0.0;
    double phi = 0.0;
    bool degenerate = false;
};

// Phase gauge fixing of a raw coefficient array: rotate the global phase so
// the all-q coefficient is real positive, solve the linear phase system
// making every nonzero t-pattern coefficient real positive, then use the
// leftover freedom (continuous when some t_k = 0, otherwise the discrete
// 2 pi/(n-1) shift) to place the all-p phase phi: 0 exactly when possible,
// else inside (-pi/(n-1), pi/(n-1)] preferring the positive endpoint.
GaugeResult gauge_fix(std::vector<cplx> raw, int n, double zero_tol = 1e-9);

// expand + gauge_fix for a given set of q factors; the p factors come from
// orthogonal_complement and carry the gauge rotations.
GsdDecomposition decompose_in_basis(const QubitState& s, std::vector<Qubit1> q_factors);

// Full pipeline: dominant eigenvector -> basis -> expansion -> gauge.
GsdDecomposition build_gsd(const QubitState& s, const SolverConfig& cfg = {});

// Theorem-1 style predicate: qubit k factors out iff every coefficient
// whose pattern has p at position k vanishes (this covers h, all t_i with
// i != k and every intermediate lacking q_k).
bool is_qubit_separable(const GsdDecomposition& d, int k, double tol = 1e-7);

// Theorem-2 predicate (three qubits only): reduced state of qubit k is
// completely mixed iff t_k = 0 and g^2 = 1/2.
bool is_reduction_mixed(const GsdDecomposition& d, int k, double tol = 1e-7);

struct BlochNormEstimate {
    double value = 0.0;
    bool support_ok = true;  // false when the coefficient support is not W-form
};

// sqrt(4 h^2 t_k^2 + (g^2 + t_k^2 - sum_{i != k} t_i^2 - h^2)^2), valid for
// three-qubit decompositions whose single-p coefficients vanish.
BlochNormEstimate bloch_norm_from_coeffs(const GsdDecomposition& d, int k = 1);

// h = 0 lower bound: g^2 >= t_1^2 + t_2^2 + t_3^2 + 2 t_1 t_2 t_3 / g.
bool check_lower_bound(const GsdDecomposition& d, double tol = 1e-7);

}  // namespace gsd
