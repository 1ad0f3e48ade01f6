#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace gsd {

// Mismatched qubit counts between a product state and a state vector.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Qubit index outside 1..n.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Non-normalizable input (zero vector, wrong amplitude count, negative
// family parameter, ...).
struct InvalidState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation defined only for a specific qubit count (e.g. Theorem-2 style
// predicates are three-qubit statements).
struct UnsupportedArity : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Precondition of a conditional formula not met (e.g. the h=0 lower bound
// queried on a decomposition with h > 0).
struct NotApplicable : std::logic_error {
    using std::logic_error::logic_error;
};

// Refusal to run an exponential-cost search beyond its size guard.
struct CostGuard : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// No multistart restart converged.
struct SolverDiverged : std::runtime_error {
    double best_residual;
    explicit SolverDiverged(double residual)
        : std::runtime_error(format_message(residual)), best_residual(residual) {}

  private:
    static std::string format_message(double residual) {
        char buf[96];
        std::snprintf(buf, sizeof buf,
                      "stationarity solver failed to converge, best residual %.3e", residual);
        return buf;
    }
};

}  // namespace gsd
