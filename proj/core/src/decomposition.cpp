#include "gsd/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace gsd {

namespace {
constexpr double pi = std::numbers::pi;
}

Qubit1 orthogonal_complement(const Qubit1& x) {
    return canonical_phase(Qubit1(-std::conj(x.c1), std::conj(x.c0)));
}

ProductState GsdBasis::pattern(std::size_t bits) const {
    const int nq = n();
    std::vector<Qubit1> f;
    f.reserve(nq);
    for (int k = 1; k <= nq; ++k)
        f.push_back(((bits >> (nq - k)) & 1u) ? p[k - 1] : q[k - 1]);
    return ProductState(std::move(f));
}

GsdBasis make_basis(std::vector<Qubit1> q_factors) {
    GsdBasis b;
    b.p.reserve(q_factors.size());
    for (const Qubit1& q : q_factors) b.p.push_back(orthogonal_complement(q));
    b.q = std::move(q_factors);
    return b;
}

std::vector<cplx> expand(const QubitState& s, const GsdBasis& basis) {
    if (basis.n() != s.n()) throw DimensionError("basis and state have different qubit counts");
    std::vector<cplx> coeffs(s.dim());
    for (std::size_t b = 0; b < s.dim(); ++b)
        coeffs[b] = overlap(basis.pattern(b), s);
    return coeffs;
}

std::size_t GsdDecomposition::t_index(int k) const {
    if (k < 1 || k > n()) throw IndexError("qubit index out of range");
    const std::size_t all = coeffs.size() - 1;
    return all ^ (std::size_t{1} << (n() - k));
}

QubitState GsdDecomposition::reconstruct() const {
    std::vector<cplx> amps(coeffs.size(), cplx{0.0, 0.0});
    for (std::size_t b = 0; b < coeffs.size(); ++b) {
        if (std::abs(coeffs[b]) == 0.0) continue;
        const ProductState ps = basis.pattern(b);
        for (std::size_t i = 0; i < amps.size(); ++i) amps[i] += coeffs[b] * ps.amplitude(i);
    }
    return QubitState(n(), std::move(amps));
}

double GsdDecomposition::max_single_p() const {
    double worst = 0.0;
    for (std::size_t b = 0; b < coeffs.size(); ++b)
        if (std::popcount(b) == 1) worst = std::max(worst, std::abs(coeffs[b]));
    return worst;
}

double GsdDecomposition::max_intermediate() const {
    const int nq = n();
    double worst = 0.0;
    for (std::size_t b = 0; b + 1 < coeffs.size(); ++b) {
        const int pc = std::popcount(b);
        if (pc >= 2 && pc != nq - 1) worst = std::max(worst, std::abs(coeffs[b]));
    }
    return worst;
}

GaugeResult gauge_fix(std::vector<cplx> raw, int n, double zero_tol) {
    if (n < 2) throw UnsupportedArity("gauge fixing needs n >= 2");
    const std::size_t dim = std::size_t{1} << n;
    if (raw.size() != dim) throw DimensionError("coefficient array length is not 2^n");

    GaugeResult out;

    // Global phase: all-q coefficient real positive.
    const cplx g0 = raw[0];
    if (std::abs(g0) > 1e-300) {
        out.global_phase = std::arg(g0);
        const cplx rot = std::polar(1.0, -out.global_phase);
        for (cplx& c : raw) c *= rot;
    }

    const std::size_t all = dim - 1;
    auto t_idx = [&](int k) { return all ^ (std::size_t{1} << (n - k)); };

    // Phase equations: rotating p_k by theta_k multiplies c_b by
    // exp(-i sum_{k in pattern} theta_k), so the t_k coefficient needs
    // sum_{j != k} theta_j = arg(c_{t_k}) (mod 2 pi).
    std::vector<int> active;
    std::vector<double> alpha(n + 1, 0.0);
    for (int k = 1; k <= n; ++k) {
        if (std::abs(raw[t_idx(k)]) > zero_tol) {
            alpha[k] = std::arg(raw[t_idx(k)]);
            active.push_back(k);
        }
    }
    const int na = static_cast<int>(active.size());
    out.degenerate = na < n;

    out.theta.assign(n, 0.0);
    if (na >= 2) {
        double sum = 0.0;
        for (int k : active) sum += alpha[k];
        const double total = sum / (na - 1);
        for (int k : active) out.theta[k - 1] = total - alpha[k];
    } else if (na == 1) {
        // Single equation: put the whole phase on the lowest free index.
        const int k = active.front();
        for (int j = 1; j <= n; ++j) {
            if (j != k) {
                out.theta[j - 1] = alpha[k];
                break;
            }
        }
    }

    auto pattern_phase = [&](std::size_t b) {
        double ph = 0.0;
        for (int k = 1; k <= n; ++k)
            if ((b >> (n - k)) & 1u) ph += out.theta[k - 1];
        return ph;
    };

    // Remaining freedom, applied to phi = arg(all-p coefficient).
    const bool have_h = std::abs(raw[all]) > zero_tol;
    if (have_h) {
        const double phi_hat = std::arg(raw[all]) - pattern_phase(all);
        if (na < n) {
            // Continuous freedom left: a coordinated shift with
            // sum theta = phi_hat preserves every active t equation and
            // zeroes phi.
            int free_j = 0;
            for (int j = 1; j <= n && free_j == 0; ++j)
                if (std::find(active.begin(), active.end(), j) == active.end()) free_j = j;
            for (int k : active) out.theta[k - 1] += phi_hat;
            out.theta[free_j - 1] += phi_hat * (1.0 - na);
            out.phi = 0.0;
        } else {
            // Only the discrete shift theta_j += 2 pi m/(n-1) remains; it
            // moves phi by -2 pi m/(n-1).
            const double w = 2.0 * pi / (n - 1);
            double m = std::round(phi_hat / w);
            double phi = phi_hat - m * w;
            if (phi <= -w / 2.0 + 1e-12) {  // boundary tie: prefer +pi/(n-1)
                phi += w;
                m -= 1.0;
            }
            // Uniform theta_j += m*w keeps every t coefficient real
            // ((n-1)*w = 2 pi) and moves phi by exactly -m*w.
            for (int j = 0; j < n; ++j) out.theta[j] += m * w;
            out.phi = phi;
        }
    }

    // Apply the rotations.
    out.coeffs = std::move(raw);
    for (std::size_t b = 1; b < dim; ++b)
        out.coeffs[b] *= std::polar(1.0, -pattern_phase(b));
    if (have_h) out.phi = std::arg(out.coeffs[all]);
    return out;
}

GsdDecomposition decompose_in_basis(const QubitState& s, std::vector<Qubit1> q_factors) {
    GsdDecomposition d;
    d.basis = make_basis(std::move(q_factors));
    GaugeResult gauge = gauge_fix(expand(s, d.basis), s.n());
    d.coeffs = std::move(gauge.coeffs);
    d.gauge_degenerate = gauge.degenerate;
    for (int k = 0; k < d.n(); ++k) {
        Qubit1& p = d.basis.p[k];
        const cplx rot = std::polar(1.0, gauge.theta[k]);
        p.c0 *= rot;
        p.c1 *= rot;
    }
    d.g = d.coeffs[0].real();
    d.t.assign(d.n(), 0.0);
    for (int k = 1; k <= d.n(); ++k) d.t[k - 1] = std::max(0.0, d.coeffs[d.t_index(k)].real());
    d.h = std::abs(d.coeffs[d.h_index()]);
    d.phi = d.h > 1e-12 ? std::arg(d.coeffs[d.h_index()]) : 0.0;
    return d;
}

GsdDecomposition build_gsd(const QubitState& s, const SolverConfig& cfg) {
    SeqEigenpair dominant = find_dominant(s, cfg);
    GsdDecomposition d = decompose_in_basis(s, dominant.product.factors);
    d.solver = std::move(dominant);
    return d;
}

bool is_qubit_separable(const GsdDecomposition& d, int k, double tol) {
    if (k < 1 || k > d.n()) throw IndexError("qubit index out of range");
    const std::size_t mask = std::size_t{1} << (d.n() - k);
    for (std::size_t b = 0; b < d.coeffs.size(); ++b)
        if ((b & mask) && std::abs(d.coeffs[b]) > tol) return false;
    return true;
}

bool is_reduction_mixed(const GsdDecomposition& d, int k, double tol) {
    if (d.n() != 3) throw UnsupportedArity("completely-mixed-reduction predicate is three-qubit only");
    if (k < 1 || k > 3) throw IndexError("qubit index out of range");
    return std::abs(d.t[k - 1]) <= tol && std::abs(d.g * d.g - 0.5) <= tol;
}

BlochNormEstimate bloch_norm_from_coeffs(const GsdDecomposition& d, int k) {
    if (d.n() != 3) throw UnsupportedArity("coefficient Bloch-norm formula is three-qubit only");
    if (k < 1 || k > 3) throw IndexError("qubit index out of range");
    BlochNormEstimate est;
    est.support_ok = d.max_single_p() <= 1e-9;
    const double tk = d.t[k - 1];
    double rest = 0.0;
    for (int i = 1; i <= 3; ++i)
        if (i != k) rest += d.t[i - 1] * d.t[i - 1];
    const double diag = d.g * d.g + tk * tk - rest - d.h * d.h;
    est.value = std::sqrt(4.0 * d.h * d.h * tk * tk + diag * diag);
    return est;
}

bool check_lower_bound(const GsdDecomposition& d, double tol) {
    if (d.n() != 3) throw UnsupportedArity("lower bound is three-qubit only");
    if (d.h > tol) throw NotApplicable("lower bound applies to h = 0 decompositions");
    const double t1 = d.t[0], t2 = d.t[1], t3 = d.t[2];
    return d.g * d.g >= t1 * t1 + t2 * t2 + t3 * t3 + 2.0 * t1 * t2 * t3 / d.g - 1e-10;
}

}  // namespace gsd
