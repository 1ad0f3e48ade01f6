#include "gsd/report.hpp"

#include <cmath>

namespace gsd {

AnalysisReport analyze(const QubitState& s, GsdDecomposition d,
                       std::optional<W3Region> region, double tol) {
    AnalysisReport rep;
    const int n = s.n();
    rep.qubits.resize(n);
    const bool g_half = std::abs(d.g * d.g - 0.5) <= tol;
    int separable_count = 0;
    for (int k = 1; k <= n; ++k) {
        QubitPredicates& q = rep.qubits[k - 1];
        q.separable = is_qubit_separable(d, k, tol);
        q.reduction_mixed = g_half && std::abs(d.t[k - 1]) <= tol;
        q.bloch_norm = bloch_vector(s, k).norm;
        if (q.separable) ++separable_count;
        if (q.reduction_mixed && !rep.teleportation_applicable) {
            rep.teleportation_applicable = true;
            rep.teleportation_qubit = k;
        }
    }
    if (region) {
        rep.label = to_string(region->label);
        rep.w3_region = region;
    } else if (separable_count == n) {
        rep.label = "product";
    } else if (separable_count > 0) {
        rep.label = "biseparable";
    } else {
        rep.label = "entangled";
    }
    rep.decomposition = std::move(d);
    return rep;
}

}  // namespace gsd
