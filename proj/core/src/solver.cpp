#include "gsd/solver.hpp"

#include <algorithm>
#include <cmath>

namespace gsd {

namespace {

double vec_norm(const std::array<cplx, 2>& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}

}  // namespace

double seq_residual(const ProductState& p, const QubitState& s) {
    const cplx ov = overlap(p, s);
    double worst = 0.0;
    for (int k = 1; k <= s.n(); ++k) {
        const auto v = partial_contract(p, s, k);
        const Qubit1& q = p.factors[k - 1];
        const cplx d0 = v[0] - ov * q.c0;
        const cplx d1 = v[1] - ov * q.c1;
        worst = std::max(worst, std::sqrt(std::norm(d0) + std::norm(d1)));
    }
    return worst;
}

Qubit1 random_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        const cplx a{gauss(rng), gauss(rng)};
        const cplx b{gauss(rng), gauss(rng)};
        if (std::norm(a) + std::norm(b) > 1e-12)
            return canonical_phase(Qubit1(a, b));
    }
}

ProductState random_product_state(int n, std::mt19937_64& rng) {
    std::vector<Qubit1> f;
    f.reserve(n);
    for (int k = 0; k < n; ++k) f.push_back(random_qubit(rng));
    return ProductState(std::move(f));
}

SeqEigenpair power_iterate(const QubitState& s, ProductState start, const SolverConfig& cfg) {
    const int n = s.n();
    if (start.n() != n) throw DimensionError("start product state has wrong qubit count");

    SeqEigenpair out;
    out.product = std::move(start);
    std::mt19937_64 degenerate_rng(cfg.rng_seed ^ 0x9e3779b97f4a7c15ull);

    double prev = std::abs(overlap(out.product, s));
    for (int it = 1; it <= cfg.max_iterations; ++it) {
        for (int k = 1; k <= n; ++k) {
            const auto v = partial_contract(out.product, s, k);
            const double nv = vec_norm(v);
            if (nv < 1e-15) {
                // Degenerate fiber: the remaining factors annihilate the
                // state, any q_k is stationary. Restart this factor.
                out.product.factors[k - 1] = random_qubit(degenerate_rng);
                ++out.degenerate_restarts;
                continue;
            }
            out.product.factors[k - 1] = canonical_phase(Qubit1(v[0] / nv, v[1] / nv));
        }
        const double g = std::abs(overlap(out.product, s));
        out.iterations = it;
        if (std::abs(g - prev) < cfg.residual_tol) {
            out.residual = seq_residual(out.product, s);
            if (out.residual <= cfg.residual_tol) {
                out.g = g;
                out.converged = true;
                return out;
            }
        }
        prev = g;
    }
    out.g = prev;
    out.residual = seq_residual(out.product, s);
    out.converged = out.residual <= cfg.residual_tol;
    return out;
}

SeqEigenpair find_dominant(const QubitState& s, const SolverConfig& cfg) {
    SeqEigenpair best;
    bool have = false;
    double best_residual = 1.0;
    for (int r = 0; r < cfg.restarts; ++r) {
        std::mt19937_64 rng(cfg.rng_seed + static_cast<std::uint64_t>(r));
        SeqEigenpair pair = power_iterate(s, random_product_state(s.n(), rng), cfg);
        best_residual = std::min(best_residual, pair.residual);
        if (pair.converged && (!have || pair.g > best.g)) {
            best = std::move(pair);
            have = true;
        }
    }
    if (!have) throw SolverDiverged(best_residual);
    return best;
}

bool same_stationary_point(const ProductState& a, const ProductState& b, double dedup_tol) {
    if (a.n() != b.n()) return false;
    for (int k = 0; k < a.n(); ++k) {
        if (std::norm(inner(a.factors[k], b.factors[k])) <= 1.0 - dedup_tol) return false;
    }
    return true;
}

std::vector<SeqEigenpair> enumerate_stationary(const QubitState& s, const SolverConfig& cfg) {
    std::vector<SeqEigenpair> found;
    auto consider = [&](SeqEigenpair pair) {
        if (!pair.converged) return;
        for (auto& f : found) {
            if (same_stationary_point(f.product, pair.product, cfg.dedup_tol)) {
                if (pair.residual < f.residual) f = std::move(pair);
                return;
            }
        }
        found.push_back(std::move(pair));
    };

    for (int r = 0; r < cfg.restarts; ++r) {
        std::mt19937_64 rng(cfg.rng_seed + static_cast<std::uint64_t>(r));
        consider(power_iterate(s, random_product_state(s.n(), rng), cfg));
    }
    if (s.n() <= 12) {
        for (std::size_t idx = 0; idx < s.dim(); ++idx) {
            std::vector<Qubit1> f;
            for (int k = 1; k <= s.n(); ++k)
                f.push_back(s.bit(idx, k) ? Qubit1(cplx{0, 0}, cplx{1, 0}) : Qubit1());
            consider(power_iterate(s, ProductState(std::move(f)), cfg));
        }
    }
    if (found.empty()) throw SolverDiverged(1.0);
    std::stable_sort(found.begin(), found.end(),
                     [](const SeqEigenpair& a, const SeqEigenpair& b) { return a.g > b.g; });
    return found;
}

}  // namespace gsd
