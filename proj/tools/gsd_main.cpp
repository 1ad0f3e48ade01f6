// Command-line front end: decompose / classify / enumerate / sweep.
//
// States come either from a JSON file ({"n": int, "amps": [[re, im], ...]})
// or from a named family: w3 a b c d | wn n a [b] | ghz-ext a b c d.
// Exit codes: 0 success, 2 parse error, 3 solver failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsd/families.hpp"
#include "gsd/json_io.hpp"
#include "gsd/oracle.hpp"
#include "gsd/report.hpp"

namespace {

struct CommonOpts {
    std::string state_file;
    std::vector<std::string> family;  // family name + parameters
    int restarts = 64;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double tol = 1e-10;
    bool verify_oracle = false;
    bool as_json = false;
    std::string out_file;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_solver_flags = true) {
    cmd->add_option("--state", o.state_file, "state JSON file");
    cmd->add_option("family", o.family, "family spec: w3 a b c d | wn n a [b] | ghz-ext a b c d")
        ->expected(0, 5);
    if (with_solver_flags) {
        cmd->add_option("--restarts", o.restarts, "solver multistart count")->check(CLI::PositiveNumber);
        auto* seed = cmd->add_option("--seed", o.seed, "solver RNG seed (fallback: GSD_SEED env)");
        cmd->callback([&o, seed] { o.seed_set = seed->count() > 0; });
        cmd->add_option("--tol", o.tol, "stationarity residual tolerance");
        cmd->add_flag("--verify-oracle", o.verify_oracle, "append a brute-force oracle cross-check");
    }
    cmd->add_flag("--json", o.as_json, "emit a JSON report");
    cmd->add_option("--out", o.out_file, "write output to FILE instead of stdout");
}

gsd::SolverConfig solver_config(const CommonOpts& o) {
    gsd::SolverConfig cfg;
    cfg.restarts = o.restarts;
    cfg.residual_tol = o.tol;
    if (o.seed_set) {
        cfg.rng_seed = o.seed;
    } else if (const char* env = std::getenv("GSD_SEED")) {
        cfg.rng_seed = std::strtoull(env, nullptr, 10);
    }
    return cfg;
}

struct ParsedInput {
    gsd::QubitState state;
    std::optional<gsd::W3Params> w3;
    std::optional<gsd::WnParams> wn;
    std::optional<gsd::GhzExtParams> ghz;
};

double num(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw gsd::InvalidState("not a number: " + s);
    return v;
}

ParsedInput parse_input(const CommonOpts& o) {
    if (!o.state_file.empty()) {
        if (!o.family.empty()) throw gsd::InvalidState("give either --state or a family, not both");
        std::ifstream in(o.state_file);
        if (!in) throw gsd::InvalidState("cannot open " + o.state_file);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw gsd::InvalidState(std::string("malformed JSON: ") + e.what());
        }
        bool renorm = false;
        gsd::QubitState s = gsd::state_from_json(j, 1e-6, &renorm);
        if (renorm)
            std::cerr << "warning: input amplitudes renormalized (norm was "
                      << s.input_norm() << ")\n";
        return {std::move(s), std::nullopt, std::nullopt, std::nullopt};
    }
    if (o.family.empty()) throw gsd::InvalidState("no input: give --state FILE or a family spec");
    const std::string& name = o.family.front();
    const std::size_t np = o.family.size() - 1;
    if (name == "w3") {
        if (np != 4) throw gsd::InvalidState("w3 takes 4 parameters");
        gsd::W3Params p(num(o.family[1]), num(o.family[2]), num(o.family[3]), num(o.family[4]));
        return {gsd::w3_state(p), p, std::nullopt, std::nullopt};
    }
    if (name == "wn") {
        if (np != 2 && np != 3) throw gsd::InvalidState("wn takes n and a (b optional)");
        const int n = static_cast<int>(num(o.family[1]));
        gsd::WnParams p = np == 3 ? gsd::WnParams(n, num(o.family[2]), num(o.family[3]))
                                  : gsd::WnParams::from_a(n, num(o.family[2]));
        return {gsd::wn_state(p), std::nullopt, p, std::nullopt};
    }
    if (name == "ghz-ext") {
        if (np != 4) throw gsd::InvalidState("ghz-ext takes 4 parameters");
        gsd::GhzExtParams p(num(o.family[1]), num(o.family[2]), num(o.family[3]), num(o.family[4]));
        return {gsd::ghz_ext_state(p), std::nullopt, std::nullopt, p};
    }
    throw gsd::InvalidState("unknown family: " + name);
}

std::ostream& open_out(const CommonOpts& o, std::ofstream& file) {
    if (o.out_file.empty()) return std::cout;
    file.open(o.out_file);
    if (!file) throw gsd::InvalidState("cannot write " + o.out_file);
    return file;
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(12);
    ss << v;
    return ss.str();
}

void print_report_text(std::ostream& os, const gsd::AnalysisReport& rep) {
    const auto& d = rep.decomposition;
    os << "classification: " << rep.label << "\n";
    os << "g   = " << fmt(d.g) << "   (g^2 = " << fmt(d.g * d.g) << ")\n";
    for (int k = 1; k <= d.n(); ++k) os << "t_" << k << " = " << fmt(d.t[k - 1]) << "\n";
    os << "h   = " << fmt(d.h) << "\n";
    os << "phi = " << fmt(d.phi) << "\n";
    for (int k = 1; k <= d.n(); ++k) {
        const auto& q = rep.qubits[k - 1];
        os << "qubit " << k << ": bloch=" << fmt(q.bloch_norm)
           << (q.separable ? "  separable" : "")
           << (q.reduction_mixed ? "  completely-mixed-reduction" : "") << "\n";
    }
    os << "teleportation applicable: " << (rep.teleportation_applicable ? "yes" : "no");
    if (rep.teleportation_applicable) os << " (choose qubit " << rep.teleportation_qubit << ")";
    os << "\n";
    if (rep.oracle_g) os << "oracle g = " << fmt(*rep.oracle_g) << "\n";
    if (d.solver.iterations > 0) {
        os << "solver: residual " << fmt(d.solver.residual) << ", " << d.solver.iterations
           << " iterations\n";
    }
}

gsd::AnalysisReport make_report(const ParsedInput& in, const CommonOpts& o) {
    std::optional<gsd::W3Region> region;
    gsd::GsdDecomposition d;
    if (in.w3) {
        region = gsd::w3_classify(*in.w3);
        d = gsd::w3_gsd(*in.w3);
    } else if (in.wn) {
        d = gsd::wn_gsd(*in.wn);
    } else if (in.ghz) {
        d = gsd::ghz_gsd(*in.ghz).decomposition;
    } else {
        d = gsd::build_gsd(in.state, solver_config(o));
    }
    gsd::AnalysisReport rep = gsd::analyze(in.state, std::move(d), region);
    if (o.verify_oracle) rep.oracle_g = gsd::brute_force_g(in.state);
    return rep;
}

int run_decompose(const CommonOpts& o) {
    const ParsedInput in = parse_input(o);
    const gsd::AnalysisReport rep = make_report(in, o);
    std::ofstream file;
    std::ostream& os = open_out(o, file);
    if (o.as_json)
        os << gsd::report_to_json(rep).dump(2) << "\n";
    else
        print_report_text(os, rep);
    return 0;
}

int run_classify(const CommonOpts& o) {
    const ParsedInput in = parse_input(o);
    const gsd::AnalysisReport rep = make_report(in, o);
    std::ofstream file;
    std::ostream& os = open_out(o, file);
    if (o.as_json) {
        nlohmann::json j = gsd::report_to_json(rep);
        j.erase("decomposition");
        j["g"] = rep.decomposition.g;
        j["h"] = rep.decomposition.h;
        os << j.dump(2) << "\n";
    } else {
        os << rep.label << "\n";
        os << "g = " << fmt(rep.decomposition.g) << ", h = " << fmt(rep.decomposition.h) << "\n";
        if (rep.w3_region) {
            const auto& bd = rep.w3_region->boundary_distances;
            os << "r_a=" << fmt(bd[0]) << " r_b=" << fmt(bd[1]) << " r_c=" << fmt(bd[2])
               << " r_d=" << fmt(bd[3]) << " r1r2r3=" << fmt(bd[4]) << "\n";
        }
    }
    return 0;
}

int run_enumerate(const CommonOpts& o) {
    const ParsedInput in = parse_input(o);
    const auto pairs = gsd::enumerate_stationary(in.state, solver_config(o));
    std::ofstream file;
    std::ostream& os = open_out(o, file);
    if (o.as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : pairs) {
            nlohmann::json factors = nlohmann::json::array();
            for (const auto& f : e.product.factors)
                factors.push_back({{f.c0.real(), f.c0.imag()}, {f.c1.real(), f.c1.imag()}});
            arr.push_back({{"g", e.g}, {"residual", e.residual}, {"factors", factors}});
        }
        os << arr.dump(2) << "\n";
    } else {
        os << pairs.size() << " stationary points\n";
        for (const auto& e : pairs) {
            os << "g = " << fmt(e.g) << "  residual = " << fmt(e.residual) << "  factors:";
            for (const auto& f : e.product.factors)
                os << "  (" << fmt(f.c0.real()) << (f.c0.imag() < 0 ? "-" : "+")
                   << fmt(std::abs(f.c0.imag())) << "i, " << fmt(f.c1.real())
                   << (f.c1.imag() < 0 ? "-" : "+") << fmt(std::abs(f.c1.imag())) << "i)";
            os << "\n";
        }
    }
    return 0;
}

int run_sweep(const CommonOpts& o, int grid) {
    if (o.family.empty() || o.family.front() != "w3")
        throw gsd::InvalidState("sweep currently supports the w3 family");
    std::ofstream file;
    std::ostream& os = open_out(o, file);
    os << "# gsd sweep v1: a,b,c,d,g,t1,t2,t3,h,phi,region\n";
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j)
            for (int k = 0; k <= grid; ++k)
                for (int l = 0; l <= grid; ++l) {
                    if (i + j + k + l == 0) continue;
                    const gsd::W3Params p(i, j, k, l);
                    const gsd::W3Coefficients co = gsd::w3_coefficients(p);
                    const gsd::W3Region reg = gsd::w3_classify(p);
                    os << fmt(p.a) << ',' << fmt(p.b) << ',' << fmt(p.c) << ',' << fmt(p.d) << ','
                       << fmt(co.g) << ',' << fmt(co.t1) << ',' << fmt(co.t2) << ',' << fmt(co.t3)
                       << ',' << fmt(co.h) << ',' << fmt(co.phi) << ',' << to_string(reg.label)
                       << "\n";
                }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Schmidt decomposition toolkit"};
    app.require_subcommand(1);

    CommonOpts dec_opts, cls_opts, enu_opts, swp_opts;
    int grid = 10;

    auto* dec = app.add_subcommand("decompose", "compute the decomposition and full report");
    add_common(dec, dec_opts);
    auto* cls = app.add_subcommand("classify", "classify a state (region label and predicates)");
    add_common(cls, cls_opts);
    auto* enu = app.add_subcommand("enumerate", "list stationary product states");
    add_common(enu, enu_opts);
    auto* swp = app.add_subcommand("sweep", "CSV sweep over a family parameter grid");
    add_common(swp, swp_opts, false);
    swp->add_option("--grid", grid, "steps per parameter")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed()) return run_decompose(dec_opts);
        if (cls->parsed()) return run_classify(cls_opts);
        if (enu->parsed()) return run_enumerate(enu_opts);
        if (swp->parsed()) return run_sweep(swp_opts, grid);
    } catch (const gsd::SolverDiverged& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
