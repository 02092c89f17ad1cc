// branchforge: exact invariants of plane branch singularities.
//
// Subcommands wrap the library pipelines: semigroup data, approximate roots,
// irreducibility, Milnor numbers by three routes, resolution ledgers,
// jacobian polygons, equisingularity of one-parameter families, msqh
// deformations and the Puiseux oracle. `--json` switches every report to a
// stable JSON envelope; `--batch FILE` processes one command line per row.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "branchforge/deform.hpp"
#include "branchforge/equising.hpp"
#include "branchforge/irreducible.hpp"
#include "branchforge/milnor.hpp"
#include "branchforge/parse.hpp"
#include "branchforge/puiseux.hpp"
#include "branchforge/report.hpp"

using namespace branchforge;

namespace {

struct Outcome {
    int code = 0;
    std::string verdict;
    Json data = Json::object();
    Json witness;
    std::string text;  // human-readable body
};

long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 t0)
        .count();
}

int puiseux_trunc(const BiPoly& f) {
    if (const char* env = std::getenv("BRANCHFORGE_TRUNC")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return default_trunc(f);
}

Json witness_json(const IrreducibilityWitness& w) {
    Json j;
    j["kind"] = w.kind;
    j["level"] = w.level;
    j["detail"] = w.detail;
    return j;
}

Json witness_json(const EquisingularityWitness& w) {
    Json j;
    j["kind"] = w.kind;
    j["level"] = w.level;
    j["r"] = w.r;
    j["s"] = w.s;
    j["detail"] = w.detail;
    return j;
}

Outcome do_irreducible(const BiPoly& f) {
    Outcome out;
    auto rep = abhyankar_irreducible(f);
    out.data = json_irreducibility(rep);
    switch (rep.verdict) {
        case IrreducibilityReport::Verdict::Yes: {
            out.code = 0;
            out.verdict = "yes";
            std::ostringstream os;
            os << "irreducible; semigroup";
            for (long v : rep.semigroup->gens) os << " " << v;
            out.text = os.str();
            break;
        }
        case IrreducibilityReport::Verdict::No:
            out.code = 1;
            out.verdict = "no";
            out.witness = witness_json(*rep.witness);
            out.text = "not irreducible: " + rep.witness->kind + " at level " +
                       std::to_string(rep.witness->level) + " (" + rep.witness->detail + ")";
            break;
        case IrreducibilityReport::Verdict::Error:
            out.code = 2;
            out.verdict = "error";
            out.text = rep.error;
            break;
    }
    return out;
}

Outcome do_semigroup(const BiPoly& f) {
    Outcome out = do_irreducible(f);
    if (out.code != 0) {
        if (out.code == 1) out.text = "input is not a branch; " + out.text;
        return out;
    }
    auto rep = abhyankar_irreducible(f);
    out.data = Json::object();
    out.data["semigroup"] = json_semigroup(*rep.semigroup);
    std::ostringstream os;
    os << "semigroup";
    for (long v : rep.semigroup->gens) os << " " << v;
    auto chk = validate_plane_semigroup(*rep.semigroup);
    if (chk.ok) {
        CharData c = char_from_generators(*rep.semigroup);
        out.data["char"] = json_char(c);
        os << "; multiplicity " << c.n << "; exponents";
        for (long b : c.b) os << " " << b;
    } else {
        out.data["tangent"] = true;  // generators with respect to a tangent line
    }
    out.text = os.str();
    return out;
}

Outcome do_approx_roots(const BiPoly& f) {
    Outcome out = do_irreducible(f);
    auto rep = abhyankar_irreducible(f);
    Json roots = Json::array();
    std::ostringstream os;
    for (const auto& r : rep.state.roots) {
        Json j;
        j["degree"] = deg_y(r);
        j["poly"] = to_string(r);
        roots.push_back(j);
        os << "F (degree " << deg_y(r) << "): " << to_string(r) << "\n";
    }
    out.data["roots"] = roots;
    out.text = os.str() + out.text;
    return out;
}

Outcome do_milnor(const BiPoly& f) {
    Outcome out;
    auto rep = abhyankar_irreducible(f);
    if (rep.verdict == IrreducibilityReport::Verdict::Error) {
        out.code = 2;
        out.verdict = "error";
        out.text = rep.error;
        return out;
    }
    if (rep.verdict == IrreducibilityReport::Verdict::No) {
        out.code = 2;
        out.verdict = "not-a-branch";
        out.data["resultant"] = milnor_resultant(f);
        out.text = "milnor by resultant " + std::to_string(milnor_resultant(f)) +
                   "; semigroup and lattice routes need an irreducible branch";
        return out;
    }
    long mr = milnor_resultant(f);
    long msg = milnor_semigroup(*rep.semigroup);
    auto chk = validate_plane_semigroup(*rep.semigroup);
    Json data;
    data["resultant"] = mr;
    data["semigroup"] = msg;
    bool agree = mr == msg;
    if (chk.ok) {
        long ml = milnor_lattice(char_from_generators(*rep.semigroup));
        data["lattice"] = ml;
        agree = agree && ml == mr;
    }
    data["agreement"] = agree;
    out.data = data;
    out.code = agree ? 0 : 1;
    out.verdict = agree ? "yes" : "no";
    std::ostringstream os;
    os << "mu = " << mr << " (resultant) / " << msg << " (semigroup)";
    if (data.contains("lattice")) os << " / " << data["lattice"].get<long>() << " (lattice)";
    os << "; agreement " << (agree ? "true" : "false");
    out.text = os.str();
    return out;
}

Outcome do_resolve(const BiPoly& f) {
    Outcome out = do_irreducible(f);
    if (out.code != 0) return out;
    auto rep = abhyankar_irreducible(f);
    auto chk = validate_plane_semigroup(*rep.semigroup);
    if (!chk.ok) {
        out.code = 2;
        out.verdict = "error";
        out.text = "resolve expects a branch transverse to x = 0 (" + chk.witness + ")";
        return out;
    }
    CharData c = char_from_generators(*rep.semigroup);
    ResolutionLedger L = ledger_from_char(c);
    std::string note;
    try {
        auto chain = strict_transform_chain(prepare(f), L);
        for (size_t j = 0; j < chain.size(); ++j) L.levels[j].theta = chain[j].level.theta;
    } catch (const domain_error& e) {
        note = e.what();
    }
    out.data = Json::object();
    out.data["ledger"] = json_ledger(L);
    if (!note.empty()) out.data["note"] = note;
    std::ostringstream os;
    for (const auto& lvl : L.levels) {
        os << "level " << lvl.j << ": n=" << lvl.n << " m=" << lvl.m << " c=" << lvl.c
           << " d=" << lvl.d;
        if (lvl.theta) os << " theta=" << q_str(*lvl.theta);
        os << "\n";
    }
    out.text = os.str();
    return out;
}

Outcome do_jacobian(const BiPoly& f) {
    Outcome out;
    NewtonPolygon P = jacobian_polygon(f);
    out.data["polygon"] = json_polygon(P);
    out.verdict = P.vertices.empty() ? "degenerate" : "ok";
    std::ostringstream os;
    os << "jacobian polygon vertices (t, x):";
    for (const auto& v : P.vertices) os << " (" << v.i << "," << v.j << ")";
    out.text = os.str();
    return out;
}

Outcome do_puiseux(const BiPoly& f) {
    Outcome out;
    auto params = newton_puiseux(f, puiseux_trunc(f));
    Json arr = Json::array();
    std::ostringstream os;
    for (const auto& p : params) {
        arr.push_back(json_param(p));
        os << "branch: x = t^" << p.n << ", y =";
        bool first = true;
        for (const auto& [e, v] : p.coeffs) {
            Q a = v;
            if (sgn(a) < 0) {
                os << (first ? " -" : " - ");
                a = -a;
            } else if (!first) {
                os << " + ";
            } else {
                os << " ";
            }
            if (a == 1)
                os << "t^" << e;
            else
                os << q_str(a) << "*t^" << e;
            first = false;
        }
        if (first) os << " 0";
        os << "  (mod t^" << p.trunc + 1 << ")\n";
    }
    out.data["branches"] = arr;
    out.verdict = "ok";
    out.text = os.str();
    return out;
}

Outcome equising_outcome(const EquisingularityReport& rep) {
    Outcome out;
    out.data = json_equisingularity(rep);
    switch (rep.verdict) {
        case EquisingularityReport::Verdict::Yes:
            out.code = 0;
            out.verdict = "yes";
            out.text = rep.method + ": equisingular";
            break;
        case EquisingularityReport::Verdict::No:
            out.code = 1;
            out.verdict = "no";
            out.witness = witness_json(*rep.witness);
            out.text = rep.method + ": not equisingular: " + rep.witness->kind + " (" +
                       std::to_string(rep.witness->r) + "," + std::to_string(rep.witness->s) +
                       ") at level " + std::to_string(rep.witness->level);
            break;
        case EquisingularityReport::Verdict::Error:
            out.code = 2;
            out.verdict = "error";
            out.text = rep.method + ": " + rep.error;
            break;
    }
    return out;
}

Outcome do_equisingular(const FamPoly& F, const std::string& method) {
    if (method == "cri1") return equising_outcome(cri1_equisingular(F));
    if (method == "cri2") return equising_outcome(cri2_check(F));
    if (method != "both") throw domain_error("unknown method '" + method + "'");
    Outcome a = equising_outcome(cri1_equisingular(F));
    Outcome b = equising_outcome(cri2_check(F));
    Outcome out;
    out.code = std::max(a.code, b.code);
    out.verdict = a.verdict == b.verdict ? a.verdict : (a.code >= b.code ? a.verdict : b.verdict);
    out.data["cri1"] = a.data;
    out.data["cri2"] = b.data;
    if (!a.witness.is_null())
        out.witness = a.witness;
    else if (!b.witness.is_null())
        out.witness = b.witness;
    out.text = a.text + "\n" + b.text;
    return out;
}

MsqhSpec load_msqh_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open spec file '" + path + "'");
    MsqhSpec spec;
    std::string line;
    int declared_levels = -1;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "levels") {
            ls >> declared_levels;
            continue;
        }
        int j = std::stoi(first);
        long r, s;
        std::string coeff;
        if (!(ls >> r >> s >> coeff)) throw domain_error("malformed spec line: " + line);
        auto slash = coeff.find('/');
        Q v;
        if (slash == std::string::npos) {
            v = Q(Z(coeff));
        } else {
            v = Q(Z(coeff.substr(0, slash)), Z(coeff.substr(slash + 1)));
            v.canonicalize();
        }
        spec.tables[j][{r, s}] = v;
    }
    (void)declared_levels;
    return spec;
}

Outcome do_msqh(const BiPoly& f, const std::string& spec_path) {
    Outcome out = do_irreducible(f);
    if (out.code != 0) return out;
    auto rep = abhyankar_irreducible(f);
    auto chk = validate_plane_semigroup(*rep.semigroup);
    if (!chk.ok) {
        out.code = 2;
        out.verdict = "error";
        out.text = "msqh expects a branch transverse to x = 0 (" + chk.witness + ")";
        return out;
    }
    CharData c = char_from_generators(*rep.semigroup);
    MsqhSpec spec = load_msqh_spec(spec_path);
    std::vector<BiPoly> roots(rep.state.roots.begin(), rep.state.roots.end() - 1);
    MsqhPoly P = build_msqh(prepare(f), c, roots, spec);
    GenericityReport gen = genericity_check(spec, c);
    out = Outcome{};
    out.verdict = gen.generic ? "yes" : "no";
    out.code = gen.generic ? 0 : 1;
    out.data["deformed"] = to_string(P);
    Json levels = Json::array();
    for (const auto& lvl : gen.levels) {
        Json j;
        j["j"] = lvl.j;
        Json qc = Json::array();
        for (const auto& v : lvl.q) qc.push_back(q_str(v));
        j["Q"] = qc;
        j["distinct_roots"] = lvl.distinct_roots;
        levels.push_back(j);
    }
    out.data["genericity"] = levels;
    out.data["generic"] = gen.generic;
    out.text = to_string(P) + "\ngeneric: " + (gen.generic ? "true" : "false");
    return out;
}

struct LineResult {
    int code = 2;
    std::string output;
};

LineResult run_tokens(const std::vector<std::string>& tokens, bool json_mode);

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
            continue;
        }
        if (!quoted && std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) {
                toks.push_back(cur);
                cur.clear();
            }
            continue;
        }
        cur.push_back(ch);
    }
    if (!cur.empty()) toks.push_back(cur);
    return toks;
}

LineResult run_batch(const std::string& path, bool json_mode) {
    std::ifstream in(path);
    if (!in) {
        return {2, "cannot open batch file '" + path + "'"};
    }
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto toks = tokenize(line);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    std::vector<LineResult> results(lines.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(lines.size()); ++i)
        results[static_cast<size_t>(i)] = run_tokens(lines[static_cast<size_t>(i)], json_mode);
    LineResult agg;
    agg.code = 0;
    std::ostringstream os;
    for (const auto& r : results) {
        os << r.output << "\n";
        agg.code = std::max(agg.code, r.code);
    }
    agg.output = os.str();
    if (!agg.output.empty()) agg.output.pop_back();
    return agg;
}

LineResult run_tokens(const std::vector<std::string>& tokens, bool json_mode) {
    CLI::App app{"exact invariants of plane branch singularities"};
    app.name("branchforge");
    bool json = json_mode;
    app.add_flag("--json", json, "emit a JSON report");
    std::string batch_file;
    app.add_option("--batch", batch_file, "process one command per line of FILE");

    std::string method = "both";
    std::string spec_file;
    std::string lambda_value = "0";
    std::string poly;

    auto add_poly = [&](CLI::App* sub) {
        sub->add_option("poly", poly, "polynomial expression")->required();
    };
    CLI::App* c_semi = app.add_subcommand("semigroup", "characteristic data and generators");
    add_poly(c_semi);
    CLI::App* c_roots = app.add_subcommand("approx-roots", "approximate roots of the criterion");
    add_poly(c_roots);
    CLI::App* c_irr = app.add_subcommand("irreducible", "Abhyankar irreducibility criterion");
    add_poly(c_irr);
    CLI::App* c_mil = app.add_subcommand("milnor", "Milnor number by three routes");
    add_poly(c_mil);
    CLI::App* c_jac = app.add_subcommand("jacobian-polygon", "jacobian Newton polygon");
    add_poly(c_jac);
    c_jac->add_option("--lambda", lambda_value, "evaluate a family at this parameter value");
    CLI::App* c_equi = app.add_subcommand("equisingular", "equisingularity of a family");
    add_poly(c_equi);
    c_equi->add_option("--method", method, "cri1 | cri2 | both")->capture_default_str();
    CLI::App* c_res = app.add_subcommand("resolve", "toric resolution ledger");
    add_poly(c_res);
    CLI::App* c_msqh = app.add_subcommand("msqh", "multi-semi-quasi-homogeneous deformation");
    add_poly(c_msqh);
    c_msqh->add_option("--spec", spec_file, "deformation table file")->required();
    CLI::App* c_pui = app.add_subcommand("puiseux", "Puiseux parametrizations (oracle)");
    add_poly(c_pui);

    app.require_subcommand(0, 1);

    std::vector<std::string> args(tokens.rbegin(), tokens.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        CLI::App* err_app = &app;
        int code = err_app->exit(e, os, os);
        return {code == 0 ? 0 : 2, os.str()};
    }
    if (!batch_file.empty()) return run_batch(batch_file, json);
    if (app.get_subcommands().empty()) return {2, app.help()};

    CLI::App* sub = app.get_subcommands().front();
    std::string cmd = sub->get_name();
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        if (cmd == "equisingular") {
            out = do_equisingular(parse_fampoly(poly), method);
        } else if (cmd == "jacobian-polygon") {
            auto v = parse_poly(poly);
            BiPoly f;
            if (auto* b = std::get_if<BiPoly>(&v)) {
                f = *b;
            } else {
                Q lam;
                auto slash = lambda_value.find('/');
                if (slash == std::string::npos) {
                    lam = Q(Z(lambda_value));
                } else {
                    lam = Q(Z(lambda_value.substr(0, slash)), Z(lambda_value.substr(slash + 1)));
                    lam.canonicalize();
                }
                f = eval_lambda(std::get<FamPoly>(v), lam);
            }
            out = do_jacobian(f);
        } else {
            BiPoly f = parse_bipoly(poly);
            if (cmd == "semigroup") out = do_semigroup(f);
            else if (cmd == "approx-roots") out = do_approx_roots(f);
            else if (cmd == "irreducible") out = do_irreducible(f);
            else if (cmd == "milnor") out = do_milnor(f);
            else if (cmd == "resolve") out = do_resolve(f);
            else if (cmd == "msqh") out = do_msqh(f, spec_file);
            else if (cmd == "puiseux") out = do_puiseux(f);
        }
    } catch (const parse_error& e) {
        out.code = 2;
        out.verdict = "error";
        out.text = std::string("parse error: ") + e.what();
    } catch (const oracle_error& e) {
        out.code = 2;
        out.verdict = "error";
        out.text = std::string("oracle: ") + e.what();
    } catch (const domain_error& e) {
        out.code = 2;
        out.verdict = "error";
        out.text = e.what();
    }
    if (json) {
        Json j = envelope(cmd, poly, out.verdict, out.data,
                          out.witness.is_null() ? Json() : out.witness, ms_since(t0));
        return {out.code, j.dump()};
    }
    return {out.code, out.text};
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> tokens(argv + 1, argv + argc);
    LineResult r = run_tokens(tokens, false);
    std::cout << r.output << "\n";
    return r.code;
}
