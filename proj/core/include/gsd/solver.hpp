#pragma once

// Numerical solution of the stationarity equations
//
//     <q_1 ... q_{k-1} q_{k+1} ... q_n | psi> = g |q_k>,   k = 1..n
//
// by alternating (higher-order) power iteration with seeded multistart.
// The restart with the largest converged eigenvalue is the dominant
// eigenvector; its g is the injective tensor norm of the state.

#include <cstdint>
#include <random>
#include <vector>

#include "gsd/state.hpp"

namespace gsd {

struct SolverConfig {
    int restarts = 64;
    // the linear convergence rate degrades near region boundaries (the
    // spectral gap closes), so the cap is generous; iterations are cheap
    int max_iterations = 200000;
    double residual_tol = 1e-10;
    double dedup_tol = 1e-6;
    std::uint64_t rng_seed = 20080915;
};

struct SeqEigenpair {
    ProductState product;
    double g = 0.0;
    double residual = 1.0;
    int iterations = 0;
    bool converged = false;
    int degenerate_restarts = 0;  // factors replaced after a zero contraction
};

// Max over k of || <q..q^k..q|psi> - <q|psi> |q_k> ||; zero exactly at a
// stationary point with eigenvalue |<q|psi>|.
double seq_residual(const ProductState& p, const QubitState& s);

Qubit1 random_qubit(std::mt19937_64& rng);
ProductState random_product_state(int n, std::mt19937_64& rng);

// One alternating-update run from a given start. The overlap magnitude is
// non-decreasing across sweeps; convergence requires both overlap
// stagnation and the residual test.
SeqEigenpair power_iterate(const QubitState& s, ProductState start, const SolverConfig& cfg = {});

// Best converged eigenpair over cfg.restarts seeded random starts
// (restart i uses seed rng_seed + i, so results are reproducible).
// Throws SolverDiverged when no restart converges.
SeqEigenpair find_dominant(const QubitState& s, const SolverConfig& cfg = {});

// Distinct converged fixed points across restarts, deduplicated by
// factor-wise fidelity (> 1 - dedup_tol on every factor, up to phase) and
// sorted by g descending. On top of the random restarts this seeds the
// iteration at every computational basis product state, which reaches
// saddle-type stationary points that are exact fixed points there.
std::vector<SeqEigenpair> enumerate_stationary(const QubitState& s, const SolverConfig& cfg = {});

bool same_stationary_point(const ProductState& a, const ProductState& b, double dedup_tol);

}  // namespace gsd
