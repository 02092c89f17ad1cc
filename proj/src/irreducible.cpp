#include "branchforge/irreducible.hpp"

#include <algorithm>
#include <numeric>

namespace branchforge {

FormalValue formal_intersection(const BiPoly& P, const std::vector<BiPoly>& roots,
                                const std::vector<long>& Bbar, long scale_divisor) {
    FormalValue out;
    if (P.is_zero()) {
        out.absent = true;
        return out;
    }
    bool covered = Bbar.size() == roots.size() + 1;
    if (!covered && Bbar.size() != roots.size())
        throw domain_error("formal_intersection: weight/root length mismatch");
    auto e = multi_adic(P, roots);
    bool have = false;
    long best = 0;
    int hits = 0;
    for (const auto& [I, alpha] : e.terms) {
        if (!covered && I.back() > 0) continue;
        long v = static_cast<long>(ord_x(alpha)) * Bbar[0];
        for (size_t l = 0; l < I.size(); ++l)
            if (covered || l + 1 < Bbar.size()) v += I[l] * Bbar[l + 1];
        if (v % scale_divisor != 0)
            throw domain_error("formal_intersection: scale does not divide the value");
        v /= scale_divisor;
        if (!have || v < best) {
            best = v;
            have = true;
            hits = 1;
        } else if (v == best) {
            ++hits;
        }
    }
    if (!have) {
        out.absent = true;
        return out;
    }
    out.value = best;
    out.tie = hits > 1;
    return out;
}

GenNewtonPolygon gen_newton_polygon(const BiPoly& P, const BiPoly& Q,
                                    const std::vector<BiPoly>& roots,
                                    const std::vector<long>& Bbar, long scale_divisor) {
    int dp = deg_y(P), dq = deg_y(Q);
    if (dq < 1 || dp < dq || dp % dq != 0)
        throw domain_error("gen_newton_polygon: deg Q must divide deg P");
    int m = dp / dq;
    auto alphas = h_adic(P, Q);  // alphas[k] multiplies Q^{m-k}
    FormalValue fq = formal_intersection(Q, roots, Bbar, scale_divisor);
    if (fq.absent || fq.tie) throw domain_error("gen_newton_polygon: degenerate formal value of Q");
    GenNewtonPolygon G;
    for (int k = 0; k <= m; ++k) {
        const BiPoly& a = alphas[static_cast<size_t>(k)];
        if (a.is_zero()) continue;
        FormalValue fa = formal_intersection(a, roots, Bbar, scale_divisor);
        if (fa.absent) continue;
        if (fa.tie)
            throw formal_tie_error("formal-tie at coefficient " + std::to_string(k));
        G.points.push_back({fa.value, static_cast<long>(m - k) * fq.value});
    }
    NewtonPolygon hull = newton_polygon_from_points(G.points);
    G.vertices = hull.vertices;
    return G;
}

bool straight_line_check(const GenNewtonPolygon& G, long Nj, long Bj, long Ej) {
    long V = Nj * Bj / Ej;
    return G.vertices.size() == 2 && G.vertices[0] == LatticePoint{0, V} &&
           G.vertices[1] == LatticePoint{V, 0};
}

BiPoly prepare(const BiPoly& F) {
    if (!is_weierstrass(F))
        throw domain_error("prepare: input must be a monic Weierstrass polynomial in y");
    int N = deg_y(F);
    auto a = h_adic(F, bp_y(1));
    const BiPoly& a1 = a[1];  // coefficient of y^{N-1}
    if (a1.is_zero()) return F;
    BiPoly shift = bp_y(1) - q_of(1, N) * a1;
    return substitute(F, bp_x(1), shift);
}

IrreducibilityReport abhyankar_irreducible(const BiPoly& F_in) {
    IrreducibilityReport rep;
    BiPoly F;
    try {
        F = prepare(F_in);
    } catch (const domain_error& e) {
        rep.verdict = IrreducibilityReport::Verdict::Error;
        rep.error = e.what();
        return rep;
    }
    long N = deg_y(F);
    rep.state.Bbar = {N};
    rep.state.E = {N};
    rep.state.roots = {bp_y(1)};
    if (N == 1) {
        rep.verdict = IrreducibilityReport::Verdict::Yes;
        rep.semigroup = SemigroupData{{1}};
        return rep;
    }
    if (resultant_y(F, partial_y(F)).is_zero()) {
        rep.verdict = IrreducibilityReport::Verdict::Error;
        rep.error = "not reduced / degenerate";
        return rep;
    }
    for (int j = 1;; ++j) {
        long Bj;
        try {
            Bj = intersection_mult(F, rep.state.roots.back());
        } catch (const domain_error&) {
            rep.verdict = IrreducibilityReport::Verdict::Error;
            rep.error = "not reduced / degenerate";
            return rep;
        }
        rep.state.Bbar.push_back(Bj);
        long Ej = std::gcd(rep.state.E.back(), Bj);
        long Nj = rep.state.E.back() / Ej;
        rep.state.E.push_back(Ej);
        rep.state.N.push_back(Nj);
        if (Nj == 1) {
            rep.verdict = IrreducibilityReport::Verdict::No;
            rep.witness = {"E-stagnation", j,
                           "E_" + std::to_string(j) + " = " + std::to_string(Ej) +
                               " does not refine"};
            return rep;
        }
        if (j >= 2) {
            long prev = rep.state.N[static_cast<size_t>(j - 2)] *
                        rep.state.Bbar[static_cast<size_t>(j - 1)];
            if (Bj <= prev) {
                rep.verdict = IrreducibilityReport::Verdict::No;
                rep.witness = {"Bbar-ordering", j,
                               "B̄_" + std::to_string(j) + " = " + std::to_string(Bj) +
                                   " <= N_{j-1} B̄_{j-1} = " + std::to_string(prev)};
                return rep;
            }
        }
        BiPoly Fnext = approximate_root(F, static_cast<int>(N / Ej));
        rep.state.roots.push_back(Fnext);
        GenNewtonPolygon G;
        try {
            std::vector<BiPoly> seq(rep.state.roots.begin(), rep.state.roots.end() - 1);
            G = gen_newton_polygon(Fnext, seq.back(), seq, rep.state.Bbar, Ej);
        } catch (const formal_tie_error& e) {
            rep.verdict = IrreducibilityReport::Verdict::No;
            rep.witness = {"formal-tie", j, e.what()};
            return rep;
        }
        rep.polygons.push_back(G);
        if (!straight_line_check(G, Nj, Bj, Ej)) {
            std::string detail = "vertices";
            for (const auto& v : G.vertices)
                detail += " (" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
            rep.verdict = IrreducibilityReport::Verdict::No;
            rep.witness = {"straight-line", j, detail};
            return rep;
        }
        if (Ej == 1) {
            rep.verdict = IrreducibilityReport::Verdict::Yes;
            rep.semigroup = SemigroupData{rep.state.Bbar};
            return rep;
        }
    }
}

StraightReport straight_expansion_analysis(const BiPoly& f, int j, const ResolutionLedger& L,
                                           const std::vector<BiPoly>& roots) {
    if (j < 2 || j > L.g()) throw domain_error("straight_expansion_analysis: level out of range");
    std::vector<BiPoly> seq(roots.begin(), roots.begin() + j);
    auto e = multi_adic(f, seq);
    long ej1 = L.e[static_cast<size_t>(j - 1)];  // e_{j-1}
    StraightReport rep;
    rep.leading_value = ej1 * L.gens.gens[static_cast<size_t>(j)];
    long nprev = L.e[static_cast<size_t>(j - 2)] / ej1;
    rep.balanced_r = L.gens.gens[static_cast<size_t>(j)] -
                     nprev * L.gens.gens[static_cast<size_t>(j - 1)];
    for (const auto& [I, alpha] : e.terms) {
        bool leading = I.back() == ej1;
        if (leading) {
            // must be the bare monic term f_j^{e_{j-1}}
            bool pure = alpha == bp_const(Q(1));
            for (size_t l = 0; l + 1 < I.size(); ++l) pure = pure && I[l] == 0;
            if (!pure)
                throw domain_error("straight_expansion_analysis: malformed leading term");
            continue;
        }
        // flatten the x-support of alpha into words
        for (const auto& [m, c] : alpha.terms()) {
            StraightTerm t;
            t.word.push_back(m.i);
            for (long v : I) t.word.push_back(v);
            auto [r, s] = invert_correspondence(j, t.word, L);
            t.r = r;
            t.s = s;
            if (r <= 0) throw domain_error("straight_expansion_analysis: r must be positive");
            if (s >= ej1) throw domain_error("straight_expansion_analysis: s bound violated");
            long lower = ej1 * rep.balanced_r;
            if (r * ej1 + s * rep.balanced_r < lower)
                throw domain_error("straight_expansion_analysis: weight lower bound violated");
            t.value = monomial_intersection(j, r, s, L.gens);
            rep.terms.push_back(std::move(t));
        }
    }
    long minv = rep.leading_value;
    for (const auto& t : rep.terms) minv = std::min(minv, t.value);
    if (minv != rep.leading_value)
        throw domain_error("straight_expansion_analysis: leading term not minimal");
    for (size_t idx = 0; idx < rep.terms.size(); ++idx)
        if (rep.terms[idx].value == minv) {
            rep.minimal.push_back(idx);
            if (rep.terms[idx].r == rep.balanced_r && rep.terms[idx].s == 0)
                rep.balanced_present = true;
        }
    return rep;
}

}  // namespace branchforge
