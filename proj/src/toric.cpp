#include "branchforge/toric.hpp"

#include <numeric>

namespace branchforge {

std::pair<long, long> chart_pair(long n, long m) {
    if (n < 1 || m < 1 || std::gcd(n, m) != 1) throw domain_error("chart_pair: need coprime inputs");
    for (long c = 1; c <= n; ++c)
        if ((c * m) % n == 1 % n) return {c, (c * m - 1) / n};
    throw domain_error("chart_pair: no solution");  // unreachable for coprime inputs
}

ResolutionLedger ledger_from_char(const CharData& c) {
    ResolutionLedger L;
    L.gens = generators_from_char(c);
    L.e = c.e;
    for (int j = 1; j <= c.g(); ++j) {
        LevelData lvl;
        lvl.j = j;
        lvl.n = c.nseq[j - 1];
        lvl.m = c.mseq[j - 1];
        auto [cc, dd] = chart_pair(lvl.n, lvl.m);
        lvl.c = cc;
        lvl.d = dd;
        L.levels.push_back(lvl);
    }
    return L;
}

DosTriple lemma_dos(long r, long l, const LevelData& lvl) {
    if (r < 0 || l <= 0) throw domain_error("lemma_dos: need r >= 0, l > 0");
    DosTriple t;
    long q = (lvl.c * r) / lvl.n;
    t.k = l + q;
    t.i0 = t.k * lvl.m - r * lvl.d;
    t.i1 = lvl.c * r - lvl.n * q;
    if (t.k <= 0 || t.i0 <= 0 || t.i1 < 0 || t.i1 >= lvl.n)
        throw domain_error("lemma_dos: bounds violated");
    return t;
}

namespace {

// Correspondence over the ledger slice whose first chart sits at absolute
// level t, with relative level count jj (charts t .. t+jj-2). The slice
// e-chain starts at e[t-1].
void corr_rec(const ResolutionLedger& L, int t, int jj, long r, long s, std::vector<long>& i_out,
              std::vector<long>& k_out) {
    if (jj == 1) {
        i_out = {r, s};
        k_out.clear();
        return;
    }
    std::vector<long> ii, kk;
    corr_rec(L, t + 1, jj - 1, r, s, ii, kk);
    // l = e-hat_1 - sum_{a=2}^{jj} (n-hat_2 ... n-hat_{a-1}) i_a
    long l = L.e[static_cast<size_t>(t)];
    long prod = 1;
    for (int a = 2; a <= jj; ++a) {
        l -= prod * ii[static_cast<size_t>(a - 1)];
        prod *= L.levels[static_cast<size_t>(t + a - 2)].n;  // n-hat_a
    }
    if (l <= 0) throw domain_error("monomial_correspondence: internal l <= 0");
    DosTriple d = lemma_dos(ii[0], l, L.levels[static_cast<size_t>(t - 1)]);
    i_out.clear();
    i_out.push_back(d.i0);
    i_out.push_back(d.i1);
    for (size_t a = 1; a < ii.size(); ++a) i_out.push_back(ii[a]);
    k_out.clear();
    k_out.push_back(d.k);
    for (long kv : kk) k_out.push_back(kv);
}

std::pair<long, long> invert_rec(const ResolutionLedger& L, int t, int jj,
                                 const std::vector<long>& i) {
    if (jj == 1) {
        if (i.size() != 2) throw domain_error("invert_correspondence: word length mismatch");
        return {i[0], i[1]};
    }
    long l = L.e[static_cast<size_t>(t)];
    long prod = 1;
    for (int a = 2; a <= jj; ++a) {
        l -= prod * i[static_cast<size_t>(a)];
        prod *= L.levels[static_cast<size_t>(t + a - 2)].n;
    }
    if (l <= 0) throw domain_error("invert_correspondence: level weight not positive");
    const LevelData& lvl = L.levels[static_cast<size_t>(t - 1)];
    long i0p = lvl.n * (i[0] - l * lvl.m) + lvl.m * i[1];
    if (i0p < 0) throw domain_error("invert_correspondence: negative inner exponent");
    std::vector<long> inner;
    inner.push_back(i0p);
    for (size_t a = 2; a < i.size(); ++a) inner.push_back(i[a]);
    return invert_rec(L, t + 1, jj - 1, inner);
}

}  // namespace

MonomialWord monomial_correspondence(int j, long r, long s, const ResolutionLedger& L) {
    if (j < 1 || j > L.g() + 1) throw domain_error("monomial_correspondence: level out of range");
    if (r < 0) throw domain_error("monomial_correspondence: r < 0");
    if (s < 0 || s >= L.e[static_cast<size_t>(j - 1)])
        throw domain_error("monomial_correspondence: s out of range");
    MonomialWord w;
    w.j = j;
    w.r = r;
    w.s = s;
    corr_rec(L, 1, j, r, s, w.i, w.k);
    return w;
}

std::pair<long, long> invert_correspondence(int j, const std::vector<long>& i,
                                            const ResolutionLedger& L) {
    if (j < 1 || j > L.g() + 1) throw domain_error("invert_correspondence: level out of range");
    if (static_cast<int>(i.size()) != j + 1)
        throw domain_error("invert_correspondence: word length mismatch");
    auto [r, s] = invert_rec(L, 1, j, i);
    MonomialWord check = monomial_correspondence(j, r, s, L);
    if (check.i != i) throw domain_error("invert_correspondence: round-trip failed");
    return {r, s};
}

long monomial_intersection(int j, long r, long s, const SemigroupData& S) {
    auto e = S.e_chain();
    int g = S.g();
    if (j < 1 || j > g + 1) throw domain_error("monomial_intersection: level out of range");
    if (s < 0 || s >= e[static_cast<size_t>(j - 1)])
        throw domain_error("monomial_intersection: s out of range");
    if (j == 1) {
        long acc = r * S.gens[0];
        if (s > 0) acc += s * S.gens[1];
        return acc;
    }
    long acc = e[static_cast<size_t>(j - 2)] * S.gens[static_cast<size_t>(j - 1)] +
               r * e[static_cast<size_t>(j - 1)];
    if (s > 0) {
        long nprev = e[static_cast<size_t>(j - 2)] / e[static_cast<size_t>(j - 1)];
        acc += s * (S.gens[static_cast<size_t>(j)] - nprev * S.gens[static_cast<size_t>(j - 1)]);
    }
    return acc;
}

BiPoly monomial_concrete(const MonomialWord& w, const std::vector<BiPoly>& roots) {
    BiPoly acc = bp_x(static_cast<int>(w.i[0]));
    for (int l = 1; l <= w.j; ++l) {
        long e = w.i[static_cast<size_t>(l)];
        if (e == 0) continue;  // roots are only needed where the exponent is positive
        if (static_cast<size_t>(l) > roots.size())
            throw domain_error("monomial_concrete: missing roots");
        acc *= roots[static_cast<size_t>(l - 1)].pow(static_cast<int>(e));
    }
    return acc;
}

StrictTransform toric_pullback(const BiPoly& A, const LevelData& lvl) {
    if (A.is_zero()) throw domain_error("toric_pullback: zero polynomial");
    StrictTransform st;
    bool first = true;
    for (const auto& [m, c] : A.terms()) {
        long ue = lvl.c * m.i + lvl.d * m.j;
        long xe = lvl.n * m.i + lvl.m * m.j;
        if (first) {
            st.exc_u = ue;
            st.exc_x2 = xe;
            first = false;
        } else {
            st.exc_u = std::min(st.exc_u, ue);
            st.exc_x2 = std::min(st.exc_x2, xe);
        }
    }
    for (const auto& [m, c] : A.terms()) {
        long ue = lvl.c * m.i + lvl.d * m.j - st.exc_u;
        long xe = lvl.n * m.i + lvl.m * m.j - st.exc_x2;
        st.body.add_term({static_cast<int>(xe), static_cast<int>(ue)}, c);
    }
    return st;
}

std::vector<ChainLevel> strict_transform_chain(const BiPoly& f, const ResolutionLedger& L) {
    std::vector<ChainLevel> out;
    BiPoly cur = f;
    for (int j = 1; j <= L.g(); ++j) {
        LevelData lvl = L.levels[static_cast<size_t>(j - 1)];
        long E = L.e[static_cast<size_t>(j)];
        auto edge = single_edge_check(newton_polygon(cur));
        if (!edge || edge->n != lvl.n || edge->m != lvl.m || edge->e != E)
            throw domain_error("strict_transform_chain: not irreducible at level " +
                               std::to_string(j) + " (polygon mismatch)");
        BiPoly R = symbolic_restriction(cur, lvl.n, lvl.m);
        Q alpha = R.coeff({0, static_cast<int>(lvl.n * E)});
        if (is_zero(alpha))
            throw domain_error("strict_transform_chain: missing top vertex at level " +
                               std::to_string(j));
        Q theta = -R.coeff({static_cast<int>(lvl.m), static_cast<int>(lvl.n * (E - 1))}) /
                  (alpha * Q(E));
        BiPoly model = bp_y(static_cast<int>(lvl.n)) - bp_term(theta, static_cast<int>(lvl.m), 0);
        if (is_zero(theta) || R != alpha * model.pow(static_cast<int>(E)))
            throw domain_error(
                "strict_transform_chain: edge restriction is not a perfect power at level " +
                std::to_string(j));
        lvl.theta = theta;

        ChainLevel cl;
        cl.level = lvl;
        cl.transform = toric_pullback(cur, lvl);
        // body(0, u) must be alpha (1 - theta u)^{e_j}.
        BiPoly slice;
        for (const auto& [m, c] : cl.transform.body.terms())
            if (m.i == 0) slice.add_term(m, c);
        BiPoly expect;
        {
            BiPoly lin = bp_const(Q(1)) - bp_term(theta, 0, 1);
            expect = alpha * lin.pow(static_cast<int>(E));
        }
        if (slice != expect)
            throw domain_error("strict_transform_chain: exceptional slice mismatch at level " +
                               std::to_string(j));
        Q theta_inv = Q(1) / theta;
        cl.translated =
            substitute(cl.transform.body, bp_x(1), bp_const(theta_inv) + bp_y(1));
        out.push_back(cl);
        cur = out.back().translated;
    }
    return out;
}

}  // namespace branchforge
