#include "branchforge/report.hpp"

namespace branchforge {

Json json_semigroup(const SemigroupData& s) {
    Json a = Json::array();
    for (long v : s.gens) a.push_back(v);
    return a;
}

Json json_char(const CharData& c) {
    Json j;
    j["n"] = c.n;
    j["b"] = c.b;
    j["e"] = c.e;
    j["nseq"] = c.nseq;
    j["mseq"] = c.mseq;
    return j;
}

Json json_polygon(const NewtonPolygon& P) {
    Json a = Json::array();
    for (const auto& v : P.vertices) a.push_back(Json::array({v.i, v.j}));
    return a;
}

Json json_gen_polygon(const GenNewtonPolygon& G) {
    Json a = Json::array();
    for (const auto& v : G.vertices) a.push_back(Json::array({v.i, v.j}));
    return a;
}

Json json_ledger(const ResolutionLedger& L) {
    Json a = Json::array();
    for (const auto& lvl : L.levels) {
        Json j;
        j["j"] = lvl.j;
        j["n"] = lvl.n;
        j["m"] = lvl.m;
        j["c"] = lvl.c;
        j["d"] = lvl.d;
        if (lvl.theta) j["theta"] = q_str(*lvl.theta);
        a.push_back(j);
    }
    return a;
}

Json json_irreducibility(const IrreducibilityReport& rep) {
    Json j;
    switch (rep.verdict) {
        case IrreducibilityReport::Verdict::Yes:
            j["irreducible"] = true;
            j["semigroup"] = json_semigroup(*rep.semigroup);
            break;
        case IrreducibilityReport::Verdict::No:
            j["irreducible"] = false;
            break;
        case IrreducibilityReport::Verdict::Error:
            j["error"] = rep.error;
            break;
    }
    Json bb = Json::array();
    for (long v : rep.state.Bbar) bb.push_back(v);
    j["Bbar"] = bb;
    Json polys = Json::array();
    for (const auto& G : rep.polygons) polys.push_back(json_gen_polygon(G));
    j["gen_polygons"] = polys;
    return j;
}

Json json_equisingularity(const EquisingularityReport& rep) {
    Json j;
    j["method"] = rep.method;
    switch (rep.verdict) {
        case EquisingularityReport::Verdict::Yes:
            j["equisingular"] = true;
            break;
        case EquisingularityReport::Verdict::No:
            j["equisingular"] = false;
            break;
        case EquisingularityReport::Verdict::Error:
            j["error"] = rep.error;
            break;
    }
    Json tr = Json::array();
    for (const auto& lv : rep.trace) {
        Json t;
        t["j"] = lv.j;
        t["N"] = lv.N;
        t["M"] = lv.M;
        t["theta0"] = q_str(lv.theta0);
        tr.push_back(t);
    }
    j["trace"] = tr;
    return j;
}

Json json_param(const PuiseuxParam& p) {
    Json j;
    j["n"] = p.n;
    Json coeffs = Json::object();
    for (const auto& [e, v] : p.coeffs) coeffs[std::to_string(e)] = q_str(v);
    j["coeffs"] = coeffs;
    j["trunc"] = p.trunc;
    return j;
}

Json envelope(const std::string& command, const std::string& input, const std::string& verdict,
              Json data, Json witness, long timing_ms) {
    Json j;
    j["command"] = command;
    j["input"] = input;
    j["verdict"] = verdict;
    j["data"] = std::move(data);
    j["witness"] = std::move(witness);
    j["timing_ms"] = timing_ms;
    return j;
}

}  // namespace branchforge
