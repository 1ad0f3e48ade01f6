#include "gsd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gsd/errors.hpp"

namespace gsd {

namespace {

constexpr double pi = std::numbers::pi;

// Only the two Bloch angles per factor matter for |<prod|psi>|: one
// overall phase per factor is irrelevant, so the search space is 2n real
// dimensions.
struct Angles {
    double theta;  // [0, pi]
    double phi;    // [0, 2 pi)
};

// Direct |<q_1...q_n|psi>| evaluation from the amplitudes. Deliberately a
// local routine rather than the library contraction helpers.
double overlap_mag(const std::vector<Angles>& ang, const QubitState& s) {
    const int n = s.n();
    cplx acc{0.0, 0.0};
    std::vector<cplx> f0(n), f1(n);
    for (int k = 0; k < n; ++k) {
        f0[k] = std::cos(ang[k].theta / 2.0);
        f1[k] = std::polar(std::sin(ang[k].theta / 2.0), -ang[k].phi);  // conjugated
    }
    for (std::size_t i = 0; i < s.dim(); ++i) {
        cplx w{1.0, 0.0};
        for (int k = 1; k <= n; ++k) w *= s.bit(i, k) ? f1[k - 1] : f0[k - 1];
        acc += w * s[i];
    }
    return std::abs(acc);
}

}  // namespace

double brute_force_g(const QubitState& s, const GridSpec& spec) {
    const int n = s.n();
    if (n > 4) throw CostGuard("brute-force oracle is limited to n <= 4");
    if (spec.theta_steps < 8 || spec.phi_steps < 8)
        throw InvalidState("grid needs at least 8 steps per angle");

    double best_overall = 0.0;

    auto descend = [&](std::vector<Angles> ang) {
        double best = overlap_mag(ang, s);
        double theta_win = pi;
        double phi_win = 2.0 * pi;
        for (int round = 0; round <= spec.refine_rounds; ++round) {
            // Coordinate sweeps at the current resolution until stagnation.
            for (int sweep = 0; sweep < 40; ++sweep) {
                bool improved = false;
                for (int k = 0; k < n; ++k) {
                    Angles incumbent = ang[k];
                    Angles local_best = incumbent;
                    double local_val = best;
                    for (int it = 0; it <= spec.theta_steps; ++it) {
                        const double th =
                            incumbent.theta - theta_win / 2.0 + theta_win * it / spec.theta_steps;
                        if (th < 0.0 || th > pi) continue;
                        for (int ip = 0; ip < spec.phi_steps; ++ip) {
                            ang[k].theta = th;
                            ang[k].phi = incumbent.phi - phi_win / 2.0 + phi_win * ip / spec.phi_steps;
                            const double v = overlap_mag(ang, s);
                            if (v > local_val) {
                                local_val = v;
                                local_best = ang[k];
                            }
                        }
                    }
                    ang[k] = local_best;
                    if (local_val > best + 1e-15) {
                        best = local_val;
                        improved = true;
                    } else {
                        best = std::max(best, local_val);
                    }
                }
                if (!improved) break;
            }
            theta_win *= spec.shrink;
            phi_win *= spec.shrink;
        }
        best_overall = std::max(best_overall, best);
    };

    // Deterministic starts: all computational corners plus a coarse lattice
    // of balanced angle combinations.
    for (std::size_t corner = 0; corner < s.dim(); ++corner) {
        std::vector<Angles> ang(n);
        for (int k = 1; k <= n; ++k)
            ang[k - 1] = {s.bit(corner, k) ? pi : 0.0, 0.0};
        descend(std::move(ang));
    }
    for (int i = 0; i < 8; ++i) {
        std::vector<Angles> ang(n);
        for (int k = 0; k < n; ++k)
            ang[k] = {pi / 2.0, 2.0 * pi * ((i + 1) * (k + 1) % 8) / 8.0};
        descend(std::move(ang));
    }
    return best_overall;
}

}  // namespace gsd
