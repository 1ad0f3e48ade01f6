// Acceptance gate: one line per criterion, exit code = number of failures.
// Tolerances and runtime budgets are pinned in each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "gsd/decomposition.hpp"
#include "gsd/families.hpp"
#include "gsd/oracle.hpp"
#include "gsd/solver.hpp"
#include "gsd/state.hpp"
#include "helpers.hpp"

using namespace gsd;

namespace {

int failures = 0;

void criterion(int id, const char* what, const std::function<bool()>& body,
               double budget_s = 0.0) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body();
    } catch (const std::exception& e) {
        std::printf("FAIL [%2d] %s -- exception: %s\n", id, what, e.what());
        ++failures;
        return;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0.0 && secs > budget_s) ok = false;
    std::printf("%s [%2d] %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, what, secs);
    if (!ok) ++failures;
}

SolverConfig cfg(int restarts, std::uint64_t seed = 20080915) {
    SolverConfig c;
    c.restarts = restarts;
    c.rng_seed = seed;
    return c;
}

W3Params random_w3(std::mt19937_64& rng, double lo = 0.05, double hi = 1.0) {
    std::uniform_real_distribution<double> uni(lo, hi);
    return W3Params(uni(rng), uni(rng), uni(rng), uni(rng));
}

// Root of r_a(a) = a(b^2+c^2+d^2-a^2) + 2bcd along a for fixed (b, c, d):
// the second-type shared surface. Signs are scale covariant, so the root can
// be found on unnormalized parameters.
double shared2_root(double b, double c, double d) {
    auto ra = [&](double a) { return a * (b * b + c * c + d * d - a * a) + 2 * b * c * d; };
    double lo = 0.0, hi = 5.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (ra(mid) > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

int main() {
    criterion(1, "symmetric W: g = 2/3 from solver, closed form and oracle", [] {
        const W3Params p(1, 1, 1, 0);
        const double g_ref = 2.0 / 3.0;
        const double g_it = find_dominant(w3_state(p), cfg(32)).g;
        const double g_cf = w3_gsd(p).g;
        const double g_or = brute_force_g(w3_state(p));
        return std::abs(g_it - g_ref) <= 1e-7 && std::abs(g_cf - g_ref) <= 1e-7 &&
               std::abs(g_or - g_ref) <= 1e-6;
    }, 5.0);

    criterion(2, "Eq.(13) prefactor: L/(2S) matches the solver, L/S does not", [] {
        std::mt19937_64 rng(211);
        int done = 0;
        while (done < 50) {
            const W3Params p = random_w3(rng, 0.2, 1.0);
            const W3Invariants inv = w3_invariants(p);
            if (w3_classify(p).label != W3Label::HighlyEntangled) continue;
            const double g_it = find_dominant(w3_state(p), cfg(24)).g;
            if (std::abs(inv.L / (2.0 * inv.S) - g_it) > 1e-7) return false;
            if (std::abs(inv.L / inv.S - 2.0 * g_it) > 1e-6) return false;  // the slip is exactly x2
            if (std::abs(inv.L / inv.S - g_it) < 1e-3) return false;
            ++done;
        }
        return true;
    }, 60.0);

    criterion(3, "Theorem 1: separability pattern <=> unit Bloch norm, 400 states", [] {
        std::mt19937_64 rng(223);
        std::normal_distribution<double> gauss;
        for (int trial = 0; trial < 400; ++trial) {
            QubitState s = [&] {
                if (trial < 200) {
                    // |q1> ⊗ (random two-qubit state)
                    const Qubit1 q1(cplx(gauss(rng), gauss(rng)), cplx(gauss(rng), gauss(rng)));
                    const QubitState tail = test::random_state(2, rng);
                    std::vector<cplx> amps(8);
                    for (int i = 0; i < 8; ++i) amps[i] = q1[(i >> 2) & 1] * tail.amps()[i & 3];
                    return QubitState(3, std::move(amps));
                }
                return test::random_state(3, rng);
            }();
            const GsdDecomposition d = build_gsd(s, cfg(24));
            for (int k = 1; k <= 3; ++k) {
                const bool sep = is_qubit_separable(d, k);
                const bool unit = std::abs(bloch_vector(s, k).norm - 1.0) <= 1e-7;
                if (sep != unit) return false;
            }
        }
        return true;
    });

    criterion(4, "Theorem 2: completely mixed reductions <=> t_k = 0 and g^2 = 1/2", [] {
        // GHZ reference point
        const GhzExtParams ghz(1, 0, 0, 1);
        const GsdDecomposition dg = ghz_gsd(ghz).decomposition;
        if (std::abs(dg.g * dg.g - 0.5) > 1e-9) return false;
        for (double t : dg.t)
            if (t > 1e-9) return false;
        for (int k = 1; k <= 3; ++k)
            if (bloch_vector(ghz_ext_state(ghz), k).norm > 1e-7) return false;

        // both directions on random states
        std::mt19937_64 rng(227);
        for (int trial = 0; trial < 100; ++trial) {
            const QubitState s = test::random_state(3, rng);
            const GsdDecomposition d = build_gsd(s, cfg(24));
            for (int k = 1; k <= 3; ++k)
                if (is_reduction_mixed(d, k) != (bloch_vector(s, k).norm <= 1e-7)) return false;
        }

        // constructed first-type shared W3 states with r_1 = 0: qubit 1 only
        std::uniform_real_distribution<double> uni(0.15, 0.35);
        for (int trial = 0; trial < 20; ++trial) {
            const double a2 = uni(rng), b2 = uni(rng);
            const W3Params p(std::sqrt(a2), std::sqrt(b2), std::sqrt(0.5 - b2),
                             std::sqrt(0.5 - a2));
            const GsdDecomposition d = w3_gsd(p);
            if (std::abs(d.g * d.g - 0.5) > 1e-7) return false;
            if (!is_reduction_mixed(d, 1)) return false;
            if (is_reduction_mixed(d, 2) || is_reduction_mixed(d, 3)) return false;
        }
        return true;
    });

    criterion(5, "Eq.(A1): coefficient Bloch norm matches the density matrix, 1e-8", [] {
        std::mt19937_64 rng(229);
        std::uniform_real_distribution<double> uni(0.1, 1.0);
        for (int trial = 0; trial < 100; ++trial) {
            const W3Params p = random_w3(rng);
            const GsdDecomposition d = w3_gsd(p);
            const QubitState s = w3_state(p);
            for (int k = 1; k <= 3; ++k) {
                const BlochNormEstimate est = bloch_norm_from_coeffs(d, k);
                if (!est.support_ok) return false;
                if (std::abs(est.value - bloch_vector(s, k).norm) > 1e-8) return false;
            }
        }
        for (int trial = 0; trial < 100; ++trial) {
            const GhzExtParams p(uni(rng), uni(rng), uni(rng), uni(rng));
            const GsdDecomposition d = ghz_gsd(p).decomposition;
            const QubitState s = ghz_ext_state(p);
            const BlochNormEstimate est = bloch_norm_from_coeffs(d, 3);
            if (!est.support_ok) return false;
            if (std::abs(est.value - bloch_vector(s, 3).norm) > 1e-8) return false;
        }
        return true;
    });

    criterion(6, "h-dichotomy on a 15^4 sweep, branch agreement on the shared surface", [] {
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 15; ++j)
                for (int k = 0; k < 15; ++k)
                    for (int l = 0; l < 15; ++l) {
                        if (i + j + k + l == 0) continue;
                        const W3Params p(i, j, k, l);
                        const W3Invariants inv = w3_invariants(p);
                        const double rmin = std::min({inv.r_a, inv.r_b, inv.r_c, inv.r_d});
                        const double h = w3_coefficients(p).h;
                        if (rmin < -1e-6 && h > 1e-9) return false;
                        if (rmin > 1e-6 && !(h > 0.0)) return false;
                    }

        // 20 points on r_a = 0: evaluate both branch formulas at the same
        // parameters and ask for agreement of every scalar
        std::mt19937_64 rng(233);
        std::uniform_real_distribution<double> uni(0.3, 0.7);
        for (int trial = 0; trial < 20; ++trial) {
            const double rb = uni(rng), rc = uni(rng), rd = uni(rng);
            const W3Params p(shared2_root(rb, rc, rd), rb, rc, rd);
            const W3Invariants inv = w3_invariants(p);

            // highly entangled branch
            const double g_hi = inv.L / (2.0 * inv.S);
            const double t1_hi = inv.L * inv.r1 / (4.0 * inv.S * (p.a * p.d + p.b * p.c));
            const double t2_hi = inv.L * inv.r2 / (4.0 * inv.S * (p.b * p.d + p.a * p.c));
            const double t3_hi = inv.L * inv.r3 / (4.0 * inv.S * (p.c * p.d + p.a * p.b));
            const double h_hi =
                std::sqrt(std::max(0.0, inv.r_a * inv.r_b * inv.r_c * inv.r_d)) /
                (4.0 * inv.L * inv.S);

            // slightly entangled (a) branch
            if (std::abs(g_hi - p.a) > 1e-7) return false;
            if (std::abs(t1_hi - p.d) > 1e-7) return false;
            if (std::abs(t2_hi - p.c) > 1e-7) return false;
            if (std::abs(t3_hi - p.b) > 1e-7) return false;
            if (std::abs(h_hi) > 1e-7) return false;
        }
        return true;
    });

    criterion(7, "Eq.(21) lower bound holds when h = 0 and saturates on the boundary", [] {
        // every slightly entangled sweep point
        for (int i = 0; i < 15; ++i)
            for (int j = 0; j < 15; ++j)
                for (int k = 0; k < 15; ++k)
                    for (int l = 0; l < 15; ++l) {
                        if (i + j + k + l == 0) continue;
                        const W3Params p(i, j, k, l);
                        const W3Label lab = w3_classify(p).label;
                        if (lab == W3Label::HighlyEntangled || lab == W3Label::SharedType1)
                            continue;
                        const W3Coefficients co = w3_coefficients(p);
                        const double gap = co.g * co.g - co.t1 * co.t1 - co.t2 * co.t2 -
                                           co.t3 * co.t3 - 2 * co.t1 * co.t2 * co.t3 / co.g;
                        if (gap < -1e-10) return false;
                    }

        // saturation exactly on r_a = 0
        std::mt19937_64 rng(239);
        std::uniform_real_distribution<double> uni(0.3, 0.7);
        for (int trial = 0; trial < 20; ++trial) {
            const double b = uni(rng), c = uni(rng), d = uni(rng);
            const double a = shared2_root(b, c, d);
            const W3Coefficients co = w3_coefficients(W3Params(a, b, c, d));
            const double gap = co.g * co.g - co.t1 * co.t1 - co.t2 * co.t2 - co.t3 * co.t3 -
                               2 * co.t1 * co.t2 * co.t3 / co.g;
            if (std::abs(gap) > 1e-7) return false;
        }
        return true;
    });

    criterion(8, "GHZ family: g^2 >= 1/2 and Eq.(27) agrees with the solver, 500 points", [] {
        std::mt19937_64 rng(241);
        std::uniform_real_distribution<double> mag(0.2, 1.0);
        std::bernoulli_distribution flip;
        for (int trial = 0; trial < 500; ++trial) {
            auto sgn = [&] { return flip(rng) ? -1.0 : 1.0; };
            const GhzExtParams p(sgn() * mag(rng), sgn() * mag(rng), sgn() * mag(rng),
                                 sgn() * mag(rng));
            const GsdDecomposition dc = ghz_gsd(p).decomposition;
            if (dc.g * dc.g < 0.5 - 1e-10) return false;
            const GsdDecomposition ds = build_gsd(ghz_ext_state(p), cfg(16));
            if (std::abs(dc.g - ds.g) > 1e-7) return false;
            if (std::abs(dc.t[2] - ds.t[2]) > 1e-7) return false;
            if (std::abs(dc.h - ds.h) > 1e-7) return false;
        }
        return true;
    });

    criterion(9, "n-qubit W family (Eq. 24) for n = 3..6", [] {
        std::mt19937_64 rng(251);
        std::uniform_real_distribution<double> uni(0.1, 0.9);
        for (int n = 3; n <= 6; ++n) {
            for (int trial = 0; trial < 20; ++trial) {
                const WnParams p(n, uni(rng), uni(rng));
                const double g_cf = wn_gsd(p).g;
                const double g_it = find_dominant(wn_state(p), cfg(16)).g;
                if (std::abs(g_cf - g_it) > 1e-6) return false;
            }
            const double a = 1.0 / std::sqrt(2.0 * (n - 1));
            const GsdDecomposition db = wn_gsd(WnParams(n, a, std::sqrt(double(n - 1)) * a));
            if (std::abs(db.g * db.g - 0.5) > 1e-8) return false;
            const GsdDecomposition du = wn_gsd(WnParams::from_a(n, 1.0 / std::sqrt(double(n - 1))));
            if (!is_qubit_separable(du, n)) return false;
        }
        return true;
    }, 120.0);

    // criteria 10 and 11 share one pass over 250 + 250 random states
    bool seq_ok = true, recon_ok = true;
    {
        std::mt19937_64 rng(257);
        for (int trial = 0; trial < 500; ++trial) {
            const int n = trial < 250 ? 3 : 4;
            const QubitState s = test::random_state(n, rng);
            const GsdDecomposition d = build_gsd(s, cfg(16));
            if (d.solver.residual > 1e-9 || d.max_single_p() > 1e-9) seq_ok = false;
            if (fidelity(d.reconstruct(), s) < 1.0 - 1e-9) recon_ok = false;
        }
    }
    criterion(10, "SEQ residual <= 1e-9 and single-p coefficients <= 1e-9, 500 states",
              [&] { return seq_ok; });
    criterion(11, "round-trip fidelity >= 1 - 1e-9 on 500 random 3/4-qubit states",
              [&] { return recon_ok; });

    std::printf("%s: %d/11 criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
                11 - failures);
    return failures;
}
