#pragma once

// Assembled analysis of a state: decomposition, per-qubit predicates,
// classification labels and the teleportation-applicability flag.

#include <optional>
#include <string>
#include <vector>

#include "gsd/decomposition.hpp"
#include "gsd/families.hpp"

namespace gsd {

struct QubitPredicates {
    bool separable = false;
    bool reduction_mixed = false;
    double bloch_norm = 0.0;
};

struct AnalysisReport {
    GsdDecomposition decomposition;
    std::vector<QubitPredicates> qubits;
    std::string label;
    std::optional<W3Region> w3_region;
    bool teleportation_applicable = false;
    int teleportation_qubit = 0;  // receiver's choice, 0 when not applicable
    std::optional<double> oracle_g;
};

// Predicates are evaluated from the decomposition (t_k and g^2 for the
// completely-mixed test, the coefficient zero pattern for separability)
// with the state only supplying the density-matrix Bloch norms.
AnalysisReport analyze(const QubitState& s, GsdDecomposition d,
                       std::optional<W3Region> region = std::nullopt,
                       double tol = 1e-7);

}  // namespace gsd
