#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "gsd/families.hpp"
#include "gsd/solver.hpp"
#include "helpers.hpp"

using namespace gsd;

namespace {

SolverConfig fast_cfg(int restarts = 24) {
    SolverConfig cfg;
    cfg.restarts = restarts;
    return cfg;
}

}  // namespace

TEST_CASE("product states have g = 1") {
    std::mt19937_64 rng(5);
    const ProductState p = random_product_state(3, rng);
    std::vector<cplx> amps(8);
    for (std::size_t i = 0; i < 8; ++i) amps[i] = p.amplitude(i);
    const QubitState s(3, std::move(amps));
    const SeqEigenpair pair = find_dominant(s, fast_cfg());
    CHECK(pair.converged);
    CHECK(pair.g == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("power_iterate on |000> recovers the state from any start") {
    const QubitState s = basis_state(3, 0);
    std::mt19937_64 rng(7);
    const SeqEigenpair pair = power_iterate(s, random_product_state(3, rng), fast_cfg());
    CHECK(pair.converged);
    CHECK(pair.g == doctest::Approx(1.0).epsilon(1e-10));
    for (const Qubit1& f : pair.product.factors) CHECK(std::abs(f.c0) == doctest::Approx(1.0));
}

TEST_CASE("symmetric W state: g = 2/3") {
    const QubitState s = w3_state(W3Params(1, 1, 1, 0));
    const SeqEigenpair pair = find_dominant(s, fast_cfg());
    CHECK(pair.g == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(pair.residual <= 1e-10);
}

TEST_CASE("extended GHZ at the tie point: g = 1/sqrt(2)") {
    const QubitState s = ghz_ext_state(GhzExtParams(1, 0, 0, 1));
    const SeqEigenpair pair = find_dominant(s, fast_cfg());
    CHECK(pair.g == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("slightly entangled W3: dominant is the largest basis term") {
    const QubitState s =
        w3_state(W3Params(std::sqrt(0.7), std::sqrt(0.1), std::sqrt(0.1), std::sqrt(0.1)));
    const SeqEigenpair pair = find_dominant(s, fast_cfg());
    CHECK(pair.g == doctest::Approx(std::sqrt(0.7)).epsilon(1e-9));
}

TEST_CASE("find_dominant is reproducible for a fixed seed") {
    std::mt19937_64 rng(13);
    const QubitState s = test::random_state(3, rng);
    SolverConfig cfg = fast_cfg();
    cfg.rng_seed = 99;
    const SeqEigenpair a = find_dominant(s, cfg);
    const SeqEigenpair b = find_dominant(s, cfg);
    CHECK(a.g == b.g);  // bit-for-bit
    CHECK(a.iterations == b.iterations);
    for (int k = 0; k < 3; ++k) {
        CHECK(a.product.factors[k].c0 == b.product.factors[k].c0);
        CHECK(a.product.factors[k].c1 == b.product.factors[k].c1);
    }
}

TEST_CASE("dominance over random product states") {
    std::mt19937_64 rng(19);
    for (const QubitState& s :
         {w3_state(W3Params(0.5, 0.5, 0.5, 0.5)), test::random_state(3, rng),
          test::random_state(4, rng)}) {
        const double g = find_dominant(s, fast_cfg()).g;
        for (int i = 0; i < 1000; ++i) {
            const ProductState p = random_product_state(s.n(), rng);
            CHECK(std::abs(overlap(p, s)) <= g + 1e-9);
        }
    }
}

TEST_CASE("fixed point satisfies the stationarity equations with one common g") {
    std::mt19937_64 rng(29);
    const QubitState s = test::random_state(3, rng);
    const SeqEigenpair pair = find_dominant(s, fast_cfg());
    const cplx ov = overlap(pair.product, s);
    CHECK(std::abs(ov) == doctest::Approx(pair.g));
    for (int k = 1; k <= 3; ++k) {
        const auto v = partial_contract(pair.product, s, k);
        const cplx d0 = v[0] - ov * pair.product.factors[k - 1].c0;
        const cplx d1 = v[1] - ov * pair.product.factors[k - 1].c1;
        CHECK(std::sqrt(std::norm(d0) + std::norm(d1)) <= 1e-10);
    }
}

TEST_CASE("overlap magnitude is monotone during the iteration") {
    std::mt19937_64 rng(37);
    const QubitState s = test::random_state(3, rng);
    // replay the sweeps by hand and track the overlap after each factor cycle
    ProductState p = random_product_state(3, rng);
    double prev = std::abs(overlap(p, s));
    for (int sweep = 0; sweep < 50; ++sweep) {
        for (int k = 1; k <= 3; ++k) {
            const auto v = partial_contract(p, s, k);
            const double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
            REQUIRE(nv > 1e-15);
            p.factors[k - 1] = canonical_phase(Qubit1(v[0] / nv, v[1] / nv));
        }
        const double cur = std::abs(overlap(p, s));
        CHECK(cur >= prev - 1e-12);
        prev = cur;
    }
}

TEST_CASE("g is invariant under local unitaries") {
    std::mt19937_64 rng(41);
    const QubitState s = w3_state(W3Params(0.6, 0.5, 0.45, 0.3));
    const double g = find_dominant(s, fast_cfg()).g;
    for (int trial = 0; trial < 3; ++trial) {
        const QubitState lu = test::random_lu_image(s, rng);
        CHECK(find_dominant(lu, fast_cfg()).g == doctest::Approx(g).epsilon(1e-9));
    }
}

TEST_CASE("W3 g is invariant under parameter permutations") {
    const double vals[4] = {0.55, 0.5, 0.48, 0.46};
    double perm[4] = {vals[0], vals[1], vals[2], vals[3]};
    std::sort(perm, perm + 4);
    const double g0 =
        find_dominant(w3_state(W3Params(vals[0], vals[1], vals[2], vals[3])), fast_cfg()).g;
    do {
        const double g =
            find_dominant(w3_state(W3Params(perm[0], perm[1], perm[2], perm[3])), fast_cfg()).g;
        CHECK(g == doctest::Approx(g0).epsilon(1e-9));
    } while (std::next_permutation(perm, perm + 4));
}

TEST_CASE("enumerate_stationary: product state has a single attractor") {
    const auto pairs = enumerate_stationary(basis_state(3, 0), fast_cfg());
    REQUIRE(!pairs.empty());
    CHECK(pairs.front().g == doctest::Approx(1.0));
    // every reported point has g in {1} or lies on a degenerate fiber; the
    // only strict attractor is the state itself
    CHECK(pairs.front().residual <= 1e-10);
}

TEST_CASE("enumerate_stationary finds all six W3 solutions in the highly entangled region") {
    const W3Params p(0.55, 0.5, 0.48, 0.46);
    const QubitState s = w3_state(p);
    SolverConfig cfg = fast_cfg(48);
    const auto numeric = enumerate_stationary(s, cfg);
    const auto analytic = w3_stationary_solutions(p);
    REQUIRE(analytic.size() >= 5);
    // dominant matches the nontrivial closed-form solution
    CHECK(numeric.front().g == doctest::Approx(analytic.front().g).epsilon(1e-8));
    // each of the four basis-term solutions and the nontrivial one shows up
    int matched = 0;
    for (const auto& a : analytic) {
        for (const auto& e : numeric) {
            if (same_stationary_point(a.product, e.product, cfg.dedup_tol)) {
                ++matched;
                break;
            }
        }
    }
    CHECK(matched >= 5);
}

TEST_CASE("enumerate_stationary: GHZ-region dominant matches the first branch") {
    const GhzExtParams p(0.7, 0.3, 0.4, 0.5);  // a^2+b^2 > c^2+d^2 after normalization
    const QubitState s = ghz_ext_state(p);
    const auto pairs = enumerate_stationary(s, fast_cfg());
    const double g1 = std::sqrt(p.a * p.a + p.b * p.b);
    CHECK(pairs.front().g == doctest::Approx(g1).epsilon(1e-9));
    // the dominant factors are |0>|0>(a,b)/g1
    CHECK(std::norm(pairs.front().product.factors[0].c0) == doctest::Approx(1.0));
    CHECK(std::norm(pairs.front().product.factors[1].c0) == doctest::Approx(1.0));
    CHECK(std::norm(pairs.front().product.factors[2].c0) ==
          doctest::Approx(p.a * p.a / (g1 * g1)));
}

TEST_CASE("zero contraction triggers a degenerate-fiber restart") {
    // start |111> against |000>: every partial contraction vanishes
    const QubitState s = basis_state(3, 0b000);
    std::vector<Qubit1> f(3, Qubit1(cplx{0, 0}, cplx{1, 0}));
    const SeqEigenpair pair = power_iterate(s, ProductState(std::move(f)), fast_cfg());
    CHECK(pair.degenerate_restarts > 0);
    CHECK(pair.converged);
    CHECK(pair.g == doctest::Approx(1.0).epsilon(1e-9));
}
