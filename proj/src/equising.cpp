#include "branchforge/equising.hpp"

#include <algorithm>
#include <numeric>

#include "branchforge/algebra.hpp"

namespace branchforge {

FamPoly substitute_y(const FamPoly& F, const FamPoly& yexpr) {
    UPoly<FamPoly> yc = ycoeffs(F);
    FamPoly r;
    for (int j = yc.deg(); j >= 0; --j) {
        r = r * yexpr;
        r += yc.c[static_cast<size_t>(j)];
    }
    return r;
}

FamPoly prepare_family(const FamPoly& F) {
    int N = deg_y(F);
    if (N < 1) throw domain_error("prepare_family: need positive y-degree");
    // Monic in y: coefficient of y^N must be the constant 1 (q(0) != 0 and a
    // Weierstrass representation; otherwise the caller must swap axes).
    for (const auto& [m, c] : F.terms())
        if (m.j == N && !(m.k == 0 && m.i == 0 && c == Q(1)))
            throw domain_error("prepare_family: not monic in y (swap axes or renormalize)");
    if (F.coeff({0, 0, N}) != Q(1))
        throw domain_error("prepare_family: not monic in y (swap axes or renormalize)");
    for (const auto& [m, c] : F.terms())
        if (m.i == 0 && m.j == 0) throw domain_error("prepare_family: F(lambda,0,0) != 0");
    // Equimultiplicity: no term below total degree N may survive. A term that
    // vanishes at lambda = 0 makes the multiplicity drop off the special
    // fiber; one that does not means the input is not in Weierstrass position.
    for (const auto& [m, c] : F.terms())
        if (m.i + m.j < N)
            throw domain_error(std::string("prepare_family: ") +
                               (eval_lambda0(F).coeff({m.i, m.j}) == Q(0)
                                    ? "family is not equimultiple at lambda = 0"
                                    : "multiplicity below the y-degree (not in Weierstrass "
                                      "position)"));
    // Kill the x y^{N-1} part of the cone by y <- y - p(lambda) x.
    UPoly<Q> rho;  // p(lambda)
    for (const auto& [m, c] : F.terms())
        if (m.j == N - 1 && m.i == 1) {
            if (rho.c.size() < static_cast<size_t>(m.k) + 1)
                rho.c.resize(static_cast<size_t>(m.k) + 1);
            rho.c[static_cast<size_t>(m.k)] = c / Q(N);
        }
    rho.trim();
    FamPoly G = F;
    if (!rho.is_zero()) {
        FamPoly shift = fp_term(Q(1), 0, 0, 1);
        for (size_t k = 0; k < rho.c.size(); ++k)
            if (!is_zero(rho.c[k])) shift -= fp_term(rho.c[k], static_cast<int>(k), 1, 0);
        G = substitute_y(F, shift);
    }
    // Tschirnhausen: remove the whole y^{N-1} coefficient.
    auto a = h_adic(G, fp_term(Q(1), 0, 0, 1));
    const FamPoly& a1 = a[1];
    if (!a1.is_zero()) {
        FamPoly shift = fp_term(Q(1), 0, 0, 1) - q_of(1, N) * a1;
        G = substitute_y(G, shift);
    }
    // Residual cone terms that are visible at lambda = 0 mean the special
    // fiber has several tangent directions; the ones vanishing at lambda = 0
    // stay and are caught by the step-1 edge conditions.
    BiPoly G0 = eval_lambda0(G);
    for (const auto& [m, c] : G0.terms())
        if (m.i + m.j <= N && m.j != N)
            throw domain_error("prepare_family: tangent cone is not a pure power of a linear form");
    for (const auto& [m, c] : G.terms()) {
        if (m.j == N - 1) throw domain_error("prepare_family: internal: shift failed");
        if (m.i + m.j < N) throw domain_error("prepare_family: internal: cone degraded");
    }
    return G;
}

EdgeFormResult edge_form_check(const FamPoly& G, long N, long M, int level) {
    EdgeFormResult out;
    if (deg_y(G) != N) throw domain_error("edge_form_check: unexpected degree");
    UPoly<Q> theta;
    for (const auto& [m, c] : G.terms()) {
        if (m.j == N) continue;  // monic head
        if (m.i == M && m.j == 0) {
            if (theta.c.size() < static_cast<size_t>(m.k) + 1)
                theta.c.resize(static_cast<size_t>(m.k) + 1);
            theta.c[static_cast<size_t>(m.k)] = -c;
            continue;
        }
        if (m.i * N + m.j * M <= N * M || m.j > N - 2) {
            out.witness = {"edge-weight", level, m.i, m.j,
                           "term x^" + std::to_string(m.i) + " y^" + std::to_string(m.j) +
                               " violates the edge condition"};
            return out;
        }
    }
    theta.trim();
    if (theta.is_zero() || is_zero(theta.c[0])) {
        out.witness = {"theta-vanishes", level, M, 0, "theta(0) = 0"};
        return out;
    }
    out.ok = true;
    out.theta = theta;
    return out;
}

namespace {

struct FlatTerm {
    std::vector<long> word;  // i_0 .. i_j
    UPoly<Q> coeff;          // coefficient as a polynomial in lambda
};

/// Flatten the (x, F_1, ..., F_j)-expansion of P (the leading pure F_j^{top}
/// term is skipped and verified to be monic).
std::vector<FlatTerm> flatten_expansion(const FamPoly& P, const std::vector<FamPoly>& roots,
                                        long top_index) {
    auto e = multi_adic(P, roots);
    std::vector<FlatTerm> out;
    for (const auto& [I, alpha] : e.terms) {
        bool leading = I.back() == top_index;
        if (leading) {
            bool pure = alpha == FamPoly::constant(Q(1));
            for (size_t l = 0; l + 1 < I.size(); ++l) pure = pure && I[l] == 0;
            if (!pure) throw domain_error("expansion: leading term is not monic");
            continue;
        }
        // group by x-exponent
        std::map<int, UPoly<Q>> by_x;
        for (const auto& [m, c] : alpha.terms()) {
            auto& u = by_x[m.i];
            if (u.c.size() < static_cast<size_t>(m.k) + 1)
                u.c.resize(static_cast<size_t>(m.k) + 1);
            u.c[static_cast<size_t>(m.k)] = c;
        }
        for (auto& [i0, u] : by_x) {
            u.trim();
            if (u.is_zero()) continue;
            FlatTerm t;
            t.word.push_back(i0);
            for (long v : I) t.word.push_back(v);
            t.coeff = std::move(u);
            out.push_back(std::move(t));
        }
    }
    return out;
}

ResolutionLedger scaled_level_ledger(const std::vector<long>& Bbar, const std::vector<long>& E,
                                     const std::vector<long>& N, const std::vector<long>& M,
                                     int j) {
    ResolutionLedger L;
    for (int l = 1; l <= j; ++l) {
        LevelData lvl;
        lvl.j = l;
        lvl.n = N[static_cast<size_t>(l - 1)];
        lvl.m = M[static_cast<size_t>(l - 1)];
        auto [cc, dd] = chart_pair(lvl.n, lvl.m);
        lvl.c = cc;
        lvl.d = dd;
        L.levels.push_back(lvl);
    }
    for (int l = 0; l <= j; ++l) L.e.push_back(E[static_cast<size_t>(l)] / E[static_cast<size_t>(j)]);
    for (int l = 0; l <= j; ++l)
        L.gens.gens.push_back(Bbar[static_cast<size_t>(l)] / E[static_cast<size_t>(j)]);
    return L;
}

}  // namespace

EquisingularityReport cri1_equisingular(const FamPoly& F_raw) {
    EquisingularityReport rep;
    rep.method = "cri1";
    FamPoly F;
    try {
        F = prepare_family(F_raw);
    } catch (const domain_error& e) {
        std::string what = e.what();
        if (what.find("equimultiple") != std::string::npos) {
            rep.verdict = EquisingularityReport::Verdict::No;
            rep.witness = {"equimultiplicity", 0, 0, 0, what};
        } else if (what.find("tangent cone") != std::string::npos) {
            rep.verdict = EquisingularityReport::Verdict::No;
            rep.witness = {"tangent-cone", 0, 0, 0, what};
        } else {
            rep.verdict = EquisingularityReport::Verdict::Error;
            rep.error = what;
        }
        return rep;
    }
    long Ntot = deg_y(F);
    BiPoly F0 = eval_lambda0(F);
    if (Ntot == 1) {
        rep.verdict = EquisingularityReport::Verdict::Yes;
        return rep;
    }
    if (resultant_y(F0, partial_y(F0)).is_zero()) {
        rep.verdict = EquisingularityReport::Verdict::Error;
        rep.error = "non-reduced fiber at lambda = 0";
        return rep;
    }
    std::vector<long> Bbar{Ntot}, E{Ntot}, N, M;
    std::vector<FamPoly> roots{fp_term(Q(1), 0, 0, 1)};
    for (int j = 1;; ++j) {
        long Bj;
        try {
            Bj = intersection_mult(F0, eval_lambda0(roots.back()));
        } catch (const domain_error&) {
            rep.verdict = EquisingularityReport::Verdict::Error;
            rep.error = "degenerate: approximate root shares a component with the fiber";
            return rep;
        }
        Bbar.push_back(Bj);
        long Ej = std::gcd(E.back(), Bj);
        long Nj = E.back() / Ej;
        if (Nj == 1) {
            rep.verdict = EquisingularityReport::Verdict::No;
            rep.witness = {"gcd-stagnation", j, 0, 0,
                           "E_" + std::to_string(j) + " = " + std::to_string(Ej) +
                               " does not refine"};
            return rep;
        }
        long Mj;
        if (j == 1) {
            Mj = Bj / Ej;
        } else {
            long prev = N.back() * Bbar[static_cast<size_t>(j - 1)];
            if (Bj <= prev) {
                rep.verdict = EquisingularityReport::Verdict::No;
                rep.witness = {"ordering", j, 0, 0,
                               "B̄_j = " + std::to_string(Bj) + " <= N_{j-1} B̄_{j-1}"};
                return rep;
            }
            Mj = (Bj - prev) / Ej;
            if (std::gcd(Nj, Mj) != 1) {
                rep.verdict = EquisingularityReport::Verdict::No;
                rep.witness = {"gcd-condition", j, Mj, 0,
                               "gcd(N_j, M_j) != 1 at level " + std::to_string(j)};
                return rep;
            }
        }
        E.push_back(Ej);
        N.push_back(Nj);
        M.push_back(Mj);
        FamPoly Fnext = approximate_root(F, static_cast<int>(Ntot / Ej));
        Q theta0;
        if (j == 1) {
            auto ef = edge_form_check(Fnext, Nj, Mj, j);
            if (!ef.ok) {
                rep.verdict = EquisingularityReport::Verdict::No;
                rep.witness = ef.witness;
                return rep;
            }
            theta0 = ef.theta.c[0];
        } else {
            ResolutionLedger L = scaled_level_ledger(Bbar, E, N, M, j);
            std::vector<FlatTerm> terms;
            try {
                terms = flatten_expansion(Fnext, roots, Nj);
            } catch (const domain_error& e) {
                rep.verdict = EquisingularityReport::Verdict::Error;
                rep.error = e.what();
                return rep;
            }
            bool seen_theta = false;
            for (const auto& t : terms) {
                long r, s;
                try {
                    std::tie(r, s) = invert_correspondence(j, t.word, L);
                } catch (const domain_error&) {
                    rep.verdict = EquisingularityReport::Verdict::No;
                    rep.witness = {"expansion-term", j, t.word[0], t.word.back(),
                                   "term is not a chart monomial"};
                    return rep;
                }
                if (r == Mj && s == 0) {
                    seen_theta = true;
                    if (is_zero(t.coeff.c[0])) {
                        rep.verdict = EquisingularityReport::Verdict::No;
                        rep.witness = {"theta-vanishes", j, r, s, "theta(0) = 0"};
                        return rep;
                    }
                    theta0 = -t.coeff.c[0];
                    continue;
                }
                if (s > Nj - 2 || r * Nj + s * Mj <= Nj * Mj) {
                    rep.verdict = EquisingularityReport::Verdict::No;
                    rep.witness = {"edge-weight", j, r, s,
                                   "chart term (" + std::to_string(r) + "," + std::to_string(s) +
                                       ") violates the edge condition"};
                    return rep;
                }
            }
            if (!seen_theta) {
                rep.verdict = EquisingularityReport::Verdict::No;
                rep.witness = {"theta-vanishes", j, Mj, 0, "edge term absent"};
                return rep;
            }
        }
        rep.trace.push_back({j, Nj, Mj, theta0});
        roots.push_back(Fnext);
        if (Ej == 1) {
            rep.verdict = EquisingularityReport::Verdict::Yes;
            return rep;
        }
    }
}

EquisingularityReport equi_the_check(const FamPoly& F_raw, const CharData& c) {
    EquisingularityReport rep;
    rep.method = "equi-the";
    FamPoly F;
    try {
        F = prepare_family(F_raw);
    } catch (const domain_error& e) {
        rep.verdict = EquisingularityReport::Verdict::No;
        rep.witness = {"tangent-cone", 0, 0, 0, e.what()};
        return rep;
    }
    SemigroupData S = generators_from_char(c);
    ResolutionLedger L = ledger_from_char(c);
    if (deg_y(F) != c.n) {
        rep.verdict = EquisingularityReport::Verdict::Error;
        rep.error = "multiplicity does not match the given characteristic data";
        return rep;
    }
    std::vector<FamPoly> roots{fp_term(Q(1), 0, 0, 1)};
    for (int j = 1; j <= c.g(); ++j) {
        long nj = c.nseq[static_cast<size_t>(j - 1)];
        long mj = c.mseq[static_cast<size_t>(j - 1)];
        long deg_next = c.n / c.e[static_cast<size_t>(j)];
        FamPoly Fnext = approximate_root(F, static_cast<int>(deg_next));
        long target = nj * S.gens[static_cast<size_t>(j)];  // weight of the edge term
        Q theta0;
        bool seen_theta = false;
        if (j == 1) {
            auto ef = edge_form_check(Fnext, nj, mj, j);
            if (!ef.ok) {
                rep.verdict = EquisingularityReport::Verdict::No;
                rep.witness = ef.witness;
                return rep;
            }
            theta0 = ef.theta.c[0];
            seen_theta = true;
        } else {
            std::vector<FlatTerm> terms;
            try {
                terms = flatten_expansion(Fnext, roots, nj);
            } catch (const domain_error& e) {
                rep.verdict = EquisingularityReport::Verdict::Error;
                rep.error = e.what();
                return rep;
            }
            for (const auto& t : terms) {
                long W = 0;
                for (size_t l = 0; l < t.word.size(); ++l)
                    W += t.word[l] * S.gens[l];
                if (W == target) {
                    seen_theta = true;
                    if (is_zero(t.coeff.c[0])) {
                        rep.verdict = EquisingularityReport::Verdict::No;
                        rep.witness = {"theta-vanishes", j, mj, 0, "theta(0) = 0"};
                        return rep;
                    }
                    theta0 = -t.coeff.c[0];
                    // internal consistency: the edge term must be M_j^{(j+1)}(m_j, 0)
                    ResolutionLedger Lj = ledger_from_char(char_from_generators(SemigroupData{
                        [&] {
                            std::vector<long> g;
                            for (int l = 0; l <= j; ++l)
                                g.push_back(S.gens[static_cast<size_t>(l)] /
                                            c.e[static_cast<size_t>(j)]);
                            return g;
                        }()}));
                    auto [r, s] = invert_correspondence(j, t.word, Lj);
                    if (r != mj || s != 0) {
                        rep.verdict = EquisingularityReport::Verdict::Error;
                        rep.error = "expansion term with edge weight is not M(m_j, 0)";
                        return rep;
                    }
                    continue;
                }
                if (W < target) {
                    rep.verdict = EquisingularityReport::Verdict::No;
                    rep.witness = {"edge-weight", j, t.word[0], t.word.back(),
                                   "weight " + std::to_string(W) + " below " +
                                       std::to_string(target)};
                    return rep;
                }
            }
            if (!seen_theta) {
                rep.verdict = EquisingularityReport::Verdict::No;
                rep.witness = {"theta-vanishes", j, mj, 0, "edge term absent"};
                return rep;
            }
        }
        rep.trace.push_back({j, nj, mj, theta0});
        roots.push_back(Fnext);
    }
    rep.verdict = EquisingularityReport::Verdict::Yes;
    return rep;
}

NewtonPolygon jacobian_polygon(const BiPoly& f) {
    if (deg_y(f) < 2) return NewtonPolygon{};  // degenerate: empty polygon
    FamPoly J = jacobian_family(lift_fam(f));
    std::vector<LatticePoint> pts;
    for (const auto& [m, c] : J.terms()) pts.push_back({m.j, m.i});  // (t, x)
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return newton_polygon_from_points(std::move(pts));
}

FamPoly jacobian_family(const FamPoly& F) {
    // Coefficient slots for the resultant in y: (k, i, j) = (lambda, x, t).
    int N = deg_y(F);
    if (N < 2) throw domain_error("jacobian_family: need deg_y >= 2");
    UPoly<FamPoly> A;  // t - F
    A.c.resize(static_cast<size_t>(N) + 1);
    for (const auto& [m, c] : F.terms()) A.c[static_cast<size_t>(m.j)] -= fp_term(c, m.k, m.i, 0);
    A.c[0] += fp_term(Q(1), 0, 0, 1);  // the fresh variable t
    A.trim();
    UPoly<FamPoly> B;
    B.c.resize(static_cast<size_t>(N));
    for (const auto& [m, c] : F.terms())
        if (m.j > 0) B.c[static_cast<size_t>(m.j - 1)] += fp_term(Q(m.j) * c, m.k, m.i, 0);
    B.trim();
    return resultant(A, B);
}

EquisingularityReport cri2_check(const FamPoly& F_raw) {
    EquisingularityReport rep;
    rep.method = "cri2";
    FamPoly F;
    try {
        F = prepare_family(F_raw);
    } catch (const domain_error& e) {
        std::string what = e.what();
        if (what.find("equimultiple") != std::string::npos ||
            what.find("tangent cone") != std::string::npos) {
            rep.verdict = EquisingularityReport::Verdict::No;
            rep.witness = {"tangent-cone", 0, 0, 0, what};
        } else {
            rep.verdict = EquisingularityReport::Verdict::Error;
            rep.error = what;
        }
        return rep;
    }
    BiPoly F0 = eval_lambda0(F);
    if (deg_y(F) < 2) {
        rep.verdict = EquisingularityReport::Verdict::Yes;
        return rep;
    }
    if (resultant_y(F0, partial_y(F0)).is_zero()) {
        rep.verdict = EquisingularityReport::Verdict::Error;
        rep.error = "non-reduced fiber at lambda = 0";
        return rep;
    }
    FamPoly J = jacobian_family(F);
    std::vector<LatticePoint> generic;
    for (const auto& [m, c] : J.terms()) generic.push_back({m.j, m.i});
    std::sort(generic.begin(), generic.end());
    generic.erase(std::unique(generic.begin(), generic.end()), generic.end());
    NewtonPolygon Ngen = newton_polygon_from_points(generic);

    std::vector<LatticePoint> at0;
    for (const auto& [m, c] : J.terms())
        if (m.k == 0) at0.push_back({m.j, m.i});
    // terms whose lambda-polynomial coefficient is nonzero at 0
    std::map<std::pair<long, long>, Q> c0;
    for (const auto& [m, c] : J.terms())
        if (m.k == 0) c0[{m.j, m.i}] += c;
    std::vector<LatticePoint> pts0;
    for (const auto& [p, c] : c0)
        if (!is_zero(c)) pts0.push_back({p.first, p.second});
    NewtonPolygon N0 = newton_polygon_from_points(pts0);

    if (Ngen == N0) {
        rep.verdict = EquisingularityReport::Verdict::Yes;  // steps 1-3 pass
        return rep;
    }
    // first differing vertex as witness
    LatticePoint diff{};
    for (const auto& v : Ngen.vertices) {
        bool found = false;
        for (const auto& w : N0.vertices)
            if (v == w) found = true;
        if (!found) {
            diff = v;
            break;
        }
    }
    rep.verdict = EquisingularityReport::Verdict::No;
    rep.witness = {"jacobian-polygon", 0, diff.i, diff.j,
                   "generic and special jacobian polygons differ"};
    return rep;
}

}  // namespace branchforge
