#pragma once

// Closed-form analytic results for the three families with known injective
// tensor norms: four-parameter three-qubit W-type states, one-parameter
// n-qubit W states and extended GHZ states. These double as oracles for
// the numerical solver and as fast decomposition paths.

#include <array>
#include <string>
#include <vector>

#include "gsd/decomposition.hpp"
#include "gsd/solver.hpp"
#include "gsd/state.hpp"

namespace gsd {

// a|100> + b|010> + c|001> + d|111>, nonnegative parameters on the unit
// sphere. The constructor normalizes and rejects negative entries.
struct W3Params {
    double a, b, c, d;
    W3Params(double a, double b, double c, double d);
};

QubitState w3_state(const W3Params& p);

struct W3Invariants {
    double r_a, r_b, r_c, r_d;
    double L;                // sqrt((ab+cd)(ac+bd)(ad+bc))
    double S;                // cyclic quadrilateral area, Heron's formula
    double s;                // semiperimeter
    double r1, r2, r3;       // Bloch vector lengths
    bool degenerate = false; // S = 0, the nontrivial solution is not defined
};

W3Invariants w3_invariants(const W3Params& p);

enum class W3Label {
    HighlyEntangled,
    SlightA,
    SlightB,
    SlightC,
    SlightD,
    SharedType1,  // some Bloch length vanishes, g^2 = 1/2
    SharedType2,  // on the surface separating highly and slightly entangled
};

std::string to_string(W3Label label);

struct W3Region {
    W3Label label;
    // (r_a, r_b, r_c, r_d, r1*r2*r3)
    std::array<double, 5> boundary_distances;
};

W3Region w3_classify(const W3Params& p, double tol = 1e-9);

// All analytic stationary eigenpairs: the four basis-term solutions, the
// nontrivial cyclic-quadrilateral solution where its radicands allow it,
// and its dual obtained by the (d, r_d) sign interchange. Every returned
// pair passes the stationarity residual test at 1e-9.
std::vector<SeqEigenpair> w3_stationary_solutions(const W3Params& p);

struct W3Coefficients {
    double g, t1, t2, t3, h, phi;
};

// Closed-form decomposition scalars for the region the parameters fall in.
W3Coefficients w3_coefficients(const W3Params& p);

GsdDecomposition w3_gsd(const W3Params& p);

// a (|10...0> + ... + |0...010>) + b|0...01>, n >= 3.
struct WnParams {
    int n;
    double a, b;
    WnParams(int n, double a, double b);
    static WnParams from_a(int n, double a);  // b fixed by normalization

    double r_n() const { return (n - 1) * a * a - b * b; }
    double S_n() const { return double(n - 1) * (n - 1) * a * a - b * b; }
    double gamma() const { return (n - 2) / 2.0; }
};

QubitState wn_state(const WnParams& p);

GsdDecomposition wn_gsd(const WnParams& p);

// a|000> + b|001> + c|110> + d|111>.
struct GhzExtParams {
    double a, b, c, d;
    GhzExtParams(double a, double b, double c, double d);
};

QubitState ghz_ext_state(const GhzExtParams& p);

struct GhzGsdInfo {
    GsdDecomposition decomposition;
    bool tie = false;  // the two stationary solutions have equal g
};

GhzGsdInfo ghz_gsd(const GhzExtParams& p);

}  // namespace gsd
