#pragma once

// JSON schemas for states, decompositions and analysis reports.
//
// State:  {"n": 3, "amps": [[re, im], ...]}  (length 2^n, auto-normalized)
// Decomposition: basis factors as complex pairs, coefficients as a
// bitstring-keyed map (0 = q, 1 = p, qubit 1 first), scalar block g/t/h/phi.

#include <json.hpp>

#include "gsd/report.hpp"

namespace gsd {

nlohmann::json state_to_json(const QubitState& s);

// Throws InvalidState on malformed input; *renormalized is set when the
// amplitudes were off normalization by more than warn_tol.
QubitState state_from_json(const nlohmann::json& j, double warn_tol = 1e-6,
                           bool* renormalized = nullptr);

nlohmann::json decomposition_to_json(const GsdDecomposition& d);
GsdDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const AnalysisReport& rep);

}  // namespace gsd
