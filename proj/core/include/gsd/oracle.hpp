#pragma once

// Brute-force lower bound on the injective tensor norm by coordinate-wise
// grid search over the Bloch angles of each factor, with multiplicative
// window refinement around the incumbent. Independent of the power
// iteration update rule; used to cross-check the solver.

#include "gsd/state.hpp"

namespace gsd {

struct GridSpec {
    int theta_steps = 60;
    int phi_steps = 60;
    int refine_rounds = 3;  // shrink stages after the full-range pass
    double shrink = 0.25;
};

// n <= 4 only (cost guard). With the defaults the result is within ~1e-6
// of the supremum on the closed-form families.
double brute_force_g(const QubitState& s, const GridSpec& spec = {});

}  // namespace gsd
