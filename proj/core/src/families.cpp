#include "gsd/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gsd {

namespace {

constexpr double pi = std::numbers::pi;

double clamp0(double x) { return x > 0.0 ? x : 0.0; }

void normalize4(double& a, double& b, double& c, double& d) {
    const double nrm = std::sqrt(a * a + b * b + c * c + d * d);
    if (nrm < 1e-300) throw InvalidState("all four family parameters are zero");
    a /= nrm;
    b /= nrm;
    c /= nrm;
    d /= nrm;
}

Qubit1 ket0() { return Qubit1(); }
Qubit1 ket1() { return Qubit1(cplx{0, 0}, cplx{1, 0}); }

}  // namespace

W3Params::W3Params(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw InvalidState("W-type parameters must be nonnegative");
    normalize4(a, b, c, d);
}

QubitState w3_state(const W3Params& p) {
    std::vector<cplx> amps(8, cplx{0, 0});
    amps[0b100] = p.a;
    amps[0b010] = p.b;
    amps[0b001] = p.c;
    amps[0b111] = p.d;
    return QubitState(3, std::move(amps));
}

W3Invariants w3_invariants(const W3Params& p) {
    const double a = p.a, b = p.b, c = p.c, d = p.d;
    W3Invariants inv;
    inv.r_a = a * (b * b + c * c + d * d - a * a) + 2 * b * c * d;
    inv.r_b = b * (a * a + c * c + d * d - b * b) + 2 * a * c * d;
    inv.r_c = c * (a * a + b * b + d * d - c * c) + 2 * a * b * d;
    inv.r_d = d * (a * a + b * b + c * c - d * d) + 2 * a * b * c;
    inv.L = std::sqrt(clamp0((a * b + c * d) * (a * c + b * d) * (a * d + b * c)));
    inv.s = (a + b + c + d) / 2.0;
    const double S2 = (inv.s - a) * (inv.s - b) * (inv.s - c) * (inv.s - d);
    inv.S = std::sqrt(clamp0(S2));
    inv.degenerate = S2 <= 1e-15;
    inv.r1 = std::abs(b * b + c * c - a * a - d * d);
    inv.r2 = std::abs(a * a + c * c - b * b - d * d);
    inv.r3 = std::abs(a * a + b * b - c * c - d * d);
    return inv;
}

std::string to_string(W3Label label) {
    switch (label) {
        case W3Label::HighlyEntangled: return "highly-entangled";
        case W3Label::SlightA: return "slightly-entangled(a)";
        case W3Label::SlightB: return "slightly-entangled(b)";
        case W3Label::SlightC: return "slightly-entangled(c)";
        case W3Label::SlightD: return "slightly-entangled(d)";
        case W3Label::SharedType1: return "shared-type-1";
        case W3Label::SharedType2: return "shared-type-2";
    }
    return "?";
}

W3Region w3_classify(const W3Params& p, double tol) {
    const W3Invariants inv = w3_invariants(p);
    W3Region reg;
    reg.boundary_distances = {inv.r_a, inv.r_b, inv.r_c, inv.r_d, inv.r1 * inv.r2 * inv.r3};
    const double rs[4] = {inv.r_a, inv.r_b, inv.r_c, inv.r_d};
    int argmin = 0;
    for (int i = 1; i < 4; ++i)
        if (rs[i] < rs[argmin]) argmin = i;
    if (rs[argmin] < -tol) {
        static const W3Label slight[4] = {W3Label::SlightA, W3Label::SlightB, W3Label::SlightC,
                                          W3Label::SlightD};
        reg.label = slight[argmin];
    } else if (rs[argmin] <= tol) {
        reg.label = W3Label::SharedType2;
    } else if (std::min({inv.r1, inv.r2, inv.r3}) <= tol) {
        reg.label = W3Label::SharedType1;
    } else {
        reg.label = W3Label::HighlyEntangled;
    }
    return reg;
}

namespace {

// Factors of the cyclic-quadrilateral stationary solution, given the four
// r-invariants (possibly sign-flipped for the dual solution).
bool quad_solution_factors(double ra, double rb, double rc, double rd, std::vector<Qubit1>& out) {
    const double q10 = ra * rd, q11 = rb * rc;
    const double q20 = rb * rd, q21 = ra * rc;
    const double q30 = rc * rd, q31 = ra * rb;
    const double floor_tol = -1e-14;
    for (double rad : {q10, q11, q20, q21, q30, q31})
        if (rad < floor_tol) return false;
    auto factor = [&](double x0, double x1) -> bool {
        const double u0 = std::sqrt(clamp0(x0)), u1 = std::sqrt(clamp0(x1));
        if (u0 + u1 < 1e-14) return false;
        out.push_back(Qubit1(u0, u1));
        return true;
    };
    out.clear();
    return factor(q10, q11) && factor(q20, q21) && factor(q30, q31);
}

}  // namespace

std::vector<SeqEigenpair> w3_stationary_solutions(const W3Params& p) {
    const QubitState s = w3_state(p);
    const W3Invariants inv = w3_invariants(p);
    std::vector<SeqEigenpair> out;

    auto push = [&](std::vector<Qubit1> factors, double g) {
        SeqEigenpair pair;
        pair.product = ProductState(std::move(factors));
        pair.g = g;
        pair.residual = seq_residual(pair.product, s);
        pair.converged = pair.residual <= 1e-9;
        if (pair.converged) out.push_back(std::move(pair));
    };

    // The four basis-term solutions.
    push({ket1(), ket0(), ket0()}, p.a);
    push({ket0(), ket1(), ket0()}, p.b);
    push({ket0(), ket0(), ket1()}, p.c);
    push({ket1(), ket1(), ket1()}, p.d);

    // Nontrivial solution, defined when all radicands are nonnegative.
    std::vector<Qubit1> factors;
    if (!inv.degenerate && quad_solution_factors(inv.r_a, inv.r_b, inv.r_c, inv.r_d, factors))
        push(std::move(factors), inv.L / (2.0 * inv.S));

    // Dual solution: substitute d -> -d and flip the sign of r_d.
    {
        const double a = p.a, b = p.b, c = p.c, d = p.d;
        const double ra = a * (b * b + c * c + d * d - a * a) - 2 * b * c * d;
        const double rb = b * (a * a + c * c + d * d - b * b) - 2 * a * c * d;
        const double rc = c * (a * a + b * b + d * d - c * c) - 2 * a * b * d;
        const double rd = d * (a * a + b * b + c * c - d * d) - 2 * a * b * c;
        const double L2 = (a * b - c * d) * (a * c - b * d) * (b * c - a * d);
        const double sp = (a + b + c - d) / 2.0;
        const double S2 = (sp - a) * (sp - b) * (sp - c) * (sp + d);
        if (L2 > 1e-15 && S2 > 1e-15 && quad_solution_factors(ra, rb, rc, rd, factors))
            push(std::move(factors), std::sqrt(L2) / (2.0 * std::sqrt(S2)));
    }

    std::sort(out.begin(), out.end(),
              [](const SeqEigenpair& x, const SeqEigenpair& y) { return x.g > y.g; });
    return out;
}

W3Coefficients w3_coefficients(const W3Params& p) {
    const W3Invariants inv = w3_invariants(p);
    const W3Region reg = w3_classify(p);
    const double a = p.a, b = p.b, c = p.c, d = p.d;
    W3Coefficients co{};
    switch (reg.label) {
        case W3Label::SlightA:
            co = {a, d, c, b, 0.0, 0.0};
            break;
        case W3Label::SlightB:
            co = {b, c, d, a, 0.0, 0.0};
            break;
        case W3Label::SlightC:
            co = {c, b, a, d, 0.0, 0.0};
            break;
        case W3Label::SlightD:
            co = {d, a, b, c, 0.0, 0.0};
            break;
        default: {
            if (inv.degenerate) {
                // Collapsed quadrilateral: fall back to the largest term.
                const double g = std::max({a, b, c, d});
                if (g == a) co = {a, d, c, b, 0.0, 0.0};
                else if (g == b) co = {b, c, d, a, 0.0, 0.0};
                else if (g == c) co = {c, b, a, d, 0.0, 0.0};
                else co = {d, a, b, c, 0.0, 0.0};
                break;
            }
            const double fourS = 4.0 * inv.S;
            co.g = inv.L / (2.0 * inv.S);
            co.t1 = inv.L * inv.r1 / (fourS * (a * d + b * c));
            co.t2 = inv.L * inv.r2 / (fourS * (b * d + a * c));
            co.t3 = inv.L * inv.r3 / (fourS * (c * d + a * b));
            co.h = std::sqrt(clamp0(inv.r_a * inv.r_b * inv.r_c * inv.r_d)) / (4.0 * inv.L * inv.S);
            co.phi = pi / 2.0;
            break;
        }
    }
    return co;
}

GsdDecomposition w3_gsd(const W3Params& p) {
    const QubitState s = w3_state(p);
    const W3Invariants inv = w3_invariants(p);
    const W3Region reg = w3_classify(p);
    const W3Coefficients co = w3_coefficients(p);

    std::vector<Qubit1> q;
    switch (reg.label) {
        case W3Label::SlightA: q = {ket1(), ket0(), ket0()}; break;
        case W3Label::SlightB: q = {ket0(), ket1(), ket0()}; break;
        case W3Label::SlightC: q = {ket0(), ket0(), ket1()}; break;
        case W3Label::SlightD: q = {ket1(), ket1(), ket1()}; break;
        default:
            if (inv.degenerate || !quad_solution_factors(inv.r_a, inv.r_b, inv.r_c, inv.r_d, q)) {
                const double g = std::max({p.a, p.b, p.c, p.d});
                if (g == p.a) q = {ket1(), ket0(), ket0()};
                else if (g == p.b) q = {ket0(), ket1(), ket0()};
                else if (g == p.c) q = {ket0(), ket0(), ket1()};
                else q = {ket1(), ket1(), ket1()};
            }
            break;
    }

    GsdDecomposition d = decompose_in_basis(s, std::move(q));
    // Scalars from the closed forms; the gauge-fixed expansion reproduces
    // them to rounding error.
    d.g = co.g;
    d.t = {co.t1, co.t2, co.t3};
    d.h = co.h;
    if (co.h > 1e-12) d.phi = co.phi;
    return d;
}

WnParams::WnParams(int n_, double a_, double b_) : n(n_), a(a_), b(b_) {
    if (n < 3) throw UnsupportedArity("n-qubit W family needs n >= 3");
    if (a < 0 || b < 0) throw InvalidState("W-type parameters must be nonnegative");
    const double nrm = std::sqrt((n - 1) * a * a + b * b);
    if (nrm < 1e-300) throw InvalidState("all family parameters are zero");
    a /= nrm;
    b /= nrm;
}

WnParams WnParams::from_a(int n, double a) {
    const double rest = 1.0 - (n - 1) * a * a;
    if (rest < -1e-12) throw InvalidState("(n-1) a^2 exceeds 1");
    return WnParams(n, a, std::sqrt(clamp0(rest)));
}

QubitState wn_state(const WnParams& p) {
    std::vector<cplx> amps(std::size_t{1} << p.n, cplx{0, 0});
    for (int k = 1; k <= p.n - 1; ++k) amps[std::size_t{1} << (p.n - k)] = p.a;
    amps[1] = p.b;
    return QubitState(p.n, std::move(amps));
}

GsdDecomposition wn_gsd(const WnParams& p) {
    const QubitState s = wn_state(p);
    const int n = p.n;
    const double rn = p.r_n();

    if (rn < 0.0) {
        std::vector<Qubit1> q(n, ket0());
        q[n - 1] = ket1();
        GsdDecomposition d = decompose_in_basis(s, std::move(q));
        d.g = p.b;
        d.h = 0.0;
        d.phi = 0.0;
        return d;
    }

    const double Sn = p.S_n();
    const double gamma = p.gamma();
    const double a = p.a, b = p.b;
    std::vector<Qubit1> q(
        n, Qubit1(a * std::sqrt(double(n - 1) * (n - 2)) / std::sqrt(Sn), std::sqrt(rn / Sn)));
    q[n - 1] = Qubit1(std::sqrt((n - 1) * rn / Sn), b * std::sqrt(double(n - 2) / Sn));

    GsdDecomposition d = decompose_in_basis(s, std::move(q));
    d.g = std::pow(1.0 - b * b, gamma + 0.5) * std::pow((n - 2) / Sn, gamma);
    d.t[n - 1] = std::sqrt((n - 2) * rn) * std::pow(rn / Sn, gamma);
    d.h = b * std::sqrt(double(n - 1)) * std::pow(rn / Sn, gamma);
    d.phi = d.h > 1e-12 ? pi / (n - 1) : 0.0;
    return d;
}

GhzExtParams::GhzExtParams(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
    normalize4(a, b, c, d);
}

QubitState ghz_ext_state(const GhzExtParams& p) {
    std::vector<cplx> amps(8, cplx{0, 0});
    amps[0b000] = p.a;
    amps[0b001] = p.b;
    amps[0b110] = p.c;
    amps[0b111] = p.d;
    return QubitState(3, std::move(amps));
}

GhzGsdInfo ghz_gsd(const GhzExtParams& p) {
    const QubitState s = ghz_ext_state(p);
    const double g1 = std::sqrt(p.a * p.a + p.b * p.b);
    const double g2 = std::sqrt(p.c * p.c + p.d * p.d);
    GhzGsdInfo info;
    info.tie = std::abs(g1 - g2) <= 1e-12;

    std::vector<Qubit1> q;
    double g;
    if (g1 >= g2) {  // exact tie: first solution
        q = {ket0(), ket0(), Qubit1(p.a, p.b)};
        g = g1;
    } else {
        q = {ket1(), ket1(), Qubit1(p.c, p.d)};
        g = g2;
    }

    GsdDecomposition d = decompose_in_basis(s, std::move(q));
    d.g = g;
    d.t[0] = 0.0;
    d.t[1] = 0.0;
    d.t[2] = std::abs(p.a * p.c + p.b * p.d) / g;
    d.h = std::abs(p.a * p.d - p.b * p.c) / g;
    info.decomposition = std::move(d);
    return info;
}

}  // namespace gsd
