#include "gsd/json_io.hpp"

#include <bitset>
#include <cmath>
#include <string>

namespace gsd {

using nlohmann::json;

namespace {

json cplx_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InvalidState("complex values must be [re, im] pairs");
    return cplx{j[0].get<double>(), j[1].get<double>()};
}

json qubit_to_json(const Qubit1& q) {
    return json::array({cplx_to_json(q.c0), cplx_to_json(q.c1)});
}

Qubit1 qubit_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw InvalidState("qubit factors must be pairs");
    return Qubit1(cplx_from_json(j[0]), cplx_from_json(j[1]));
}

std::string pattern_key(std::size_t b, int n) {
    std::string key(n, '0');
    for (int k = 0; k < n; ++k)
        if ((b >> (n - 1 - k)) & 1u) key[k] = '1';
    return key;
}

}  // namespace

json state_to_json(const QubitState& s) {
    json amps = json::array();
    for (const cplx& a : s.amps()) amps.push_back(cplx_to_json(a));
    return json{{"n", s.n()}, {"amps", amps}};
}

QubitState state_from_json(const json& j, double warn_tol, bool* renormalized) {
    if (!j.is_object() || !j.contains("n") || !j.contains("amps"))
        throw InvalidState("state JSON needs \"n\" and \"amps\"");
    if (!j["n"].is_number_integer()) throw InvalidState("\"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1 || n > 24) throw InvalidState("\"n\" out of range");
    const json& amps = j["amps"];
    if (!amps.is_array() || amps.size() != (std::size_t{1} << n))
        throw InvalidState("\"amps\" must hold exactly 2^n entries");
    std::vector<cplx> v;
    v.reserve(amps.size());
    for (const json& e : amps) v.push_back(cplx_from_json(e));
    QubitState s(n, std::move(v));
    if (renormalized) *renormalized = std::abs(s.input_norm() - 1.0) > warn_tol;
    return s;
}

json decomposition_to_json(const GsdDecomposition& d) {
    const int n = d.n();
    json coeffs = json::object();
    for (std::size_t b = 0; b < d.coeffs.size(); ++b)
        coeffs[pattern_key(b, n)] = cplx_to_json(d.coeffs[b]);
    json q = json::array(), p = json::array();
    for (int k = 0; k < n; ++k) {
        q.push_back(qubit_to_json(d.basis.q[k]));
        p.push_back(qubit_to_json(d.basis.p[k]));
    }
    return json{{"n", n},
                {"g", d.g},
                {"t", d.t},
                {"h", d.h},
                {"phi", d.phi},
                {"basis", json{{"q", q}, {"p", p}}},
                {"coefficients", coeffs},
                {"gauge_degenerate", d.gauge_degenerate}};
}

GsdDecomposition decomposition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("basis") || !j.contains("coefficients"))
        throw InvalidState("decomposition JSON needs \"n\", \"basis\" and \"coefficients\"");
    const int n = j["n"].get<int>();
    if (n < 1 || n > 24) throw InvalidState("\"n\" out of range");
    GsdDecomposition d;
    for (const json& e : j["basis"]["q"]) d.basis.q.push_back(qubit_from_json(e));
    for (const json& e : j["basis"]["p"]) d.basis.p.push_back(qubit_from_json(e));
    if (static_cast<int>(d.basis.q.size()) != n || static_cast<int>(d.basis.p.size()) != n)
        throw InvalidState("basis must hold n q-factors and n p-factors");
    d.coeffs.assign(std::size_t{1} << n, cplx{0, 0});
    for (const auto& [key, val] : j["coefficients"].items()) {
        if (key.size() != static_cast<std::size_t>(n))
            throw InvalidState("coefficient keys must be n-bit strings");
        std::size_t b = 0;
        for (char ch : key) {
            if (ch != '0' && ch != '1') throw InvalidState("coefficient keys must be bitstrings");
            b = (b << 1) | (ch == '1');
        }
        d.coeffs[b] = cplx_from_json(val);
    }
    d.g = j.value("g", std::abs(d.coeffs[0]));
    d.t = j.value("t", std::vector<double>(n, 0.0));
    d.h = j.value("h", std::abs(d.coeffs.back()));
    d.phi = j.value("phi", 0.0);
    d.gauge_degenerate = j.value("gauge_degenerate", false);
    return d;
}

json report_to_json(const AnalysisReport& rep) {
    json qubits = json::array();
    for (const QubitPredicates& q : rep.qubits) {
        qubits.push_back(json{{"separable", q.separable},
                              {"reduction_mixed", q.reduction_mixed},
                              {"bloch_norm", q.bloch_norm}});
    }
    json out{{"label", rep.label},
             {"decomposition", decomposition_to_json(rep.decomposition)},
             {"qubits", qubits},
             {"teleportation",
              json{{"applicable", rep.teleportation_applicable},
                   {"qubit", rep.teleportation_qubit}}},
             {"solver",
              json{{"g", rep.decomposition.solver.g},
                   {"residual", rep.decomposition.solver.residual},
                   {"iterations", rep.decomposition.solver.iterations},
                   {"converged", rep.decomposition.solver.converged},
                   {"degenerate_restarts", rep.decomposition.solver.degenerate_restarts}}}};
    if (rep.w3_region) {
        out["region"] = json{{"label", to_string(rep.w3_region->label)},
                             {"boundary_distances", rep.w3_region->boundary_distances}};
    }
    if (rep.oracle_g) out["oracle_g"] = *rep.oracle_g;
    return out;
}

}  // namespace gsd
