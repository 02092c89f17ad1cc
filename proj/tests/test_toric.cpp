#include <doctest.h>

#include <set>

#include "branchforge/puiseux.hpp"
#include "branchforge/toric.hpp"
#include "support.hpp"

using namespace branchforge;
using namespace branchforge::testsupport;

namespace {

ResolutionLedger quartic_ledger() {
    return ledger_from_char(make_char_data(4, {6, 7}));
}

}  // namespace

TEST_CASE("chart pairs") {
    CHECK(chart_pair(2, 3) == std::pair<long, long>{1, 1});
    CHECK(chart_pair(2, 5) == std::pair<long, long>{1, 2});
    CHECK(chart_pair(3, 2) == std::pair<long, long>{2, 1});
    CHECK_THROWS_AS(chart_pair(4, 6), domain_error);
}

TEST_CASE("ledger from characteristic data") {
    ResolutionLedger L = quartic_ledger();
    REQUIRE(L.g() == 2);
    CHECK(L.levels[0].n == 2);
    CHECK(L.levels[0].m == 3);
    CHECK(L.levels[0].c == 1);
    CHECK(L.levels[0].d == 1);
    CHECK(L.levels[1].n == 2);
    CHECK(L.levels[1].m == 1);
    CHECK(L.levels[1].c == 1);
    CHECK(L.levels[1].d == 0);
    CHECK(L.gens.gens == std::vector<long>{4, 6, 13});

    ResolutionLedger L2 = ledger_from_char(make_char_data(2, {3}));
    REQUIRE(L2.g() == 1);
    CHECK(L2.levels[0].n == 2);
    CHECK(L2.levels[0].m == 3);

    ResolutionLedger L3 = ledger_from_char(make_char_data(6, {8, 9}));
    REQUIRE(L3.g() == 2);
    CHECK(L3.levels[0].n == 3);
    CHECK(L3.levels[0].m == 4);
    CHECK(L3.levels[1].n == 2);
    CHECK(L3.levels[1].m == 1);
}

TEST_CASE("lemma dos worked examples") {
    LevelData lvl{1, 2, 3, 1, 1, {}};
    auto t1 = lemma_dos(1, 1, lvl);
    CHECK(t1.k == 1);
    CHECK(t1.i0 == 2);
    CHECK(t1.i1 == 1);
    auto t2 = lemma_dos(2, 1, lvl);
    CHECK(t2.k == 2);
    CHECK(t2.i0 == 4);
    CHECK(t2.i1 == 0);
    auto t3 = lemma_dos(0, 1, lvl);
    CHECK(t3.k == 1);
    CHECK(t3.i0 == 3);
    CHECK(t3.i1 == 0);
}

TEST_CASE("lemma dos Laurent identity on random coprime pairs") {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<long> nd(2, 9), md(1, 30), ld(1, 10);
    int done = 0;
    while (done < 20) {
        long n = nd(rng), m = md(rng);
        if (std::gcd(n, m) != 1) continue;
        ++done;
        auto [c, d] = chart_pair(n, m);
        LevelData lvl{1, n, m, c, d, {}};
        for (long r = 0; r <= 30; ++r)
            for (long l = 1; l <= 10; ++l) {
                auto t = lemma_dos(r, l, lvl);
                // (y^{ln} o pi) u^k x2^r and (x^{i0} y^{i1}) o pi as Laurent
                // monomials in (u, x2): y o pi = u^d x2^m, x o pi = u^c x2^n.
                long lhs_u = d * l * n + t.k;
                long lhs_x = m * l * n + r;
                long rhs_u = c * t.i0 + d * t.i1;
                long rhs_x = n * t.i0 + m * t.i1;
                CHECK(lhs_u == rhs_u);
                CHECK(lhs_x == rhs_x);
                CHECK((t.i1 == 0) == (r % n == 0));
            }
    }
}

TEST_CASE("monomial correspondence on the quartic") {
    ResolutionLedger L = quartic_ledger();
    auto w1 = monomial_correspondence(2, 0, 1, L);
    CHECK(w1.i == std::vector<long>{3, 0, 1});
    CHECK(w1.k == std::vector<long>{1});
    auto w2 = monomial_correspondence(2, 1, 0, L);
    CHECK(w2.i == std::vector<long>{5, 1, 0});
    CHECK(w2.k == std::vector<long>{2});
    auto w3 = monomial_correspondence(2, 2, 0, L);
    CHECK(w3.i == std::vector<long>{7, 0, 0});
    CHECK(w3.k == std::vector<long>{3});

    // Concrete products against the quartic's own terms.
    std::vector<BiPoly> roots{bp_y(1), cusp()};
    CHECK(monomial_concrete(w1, roots) == bp_x(3) * cusp());
    CHECK(monomial_concrete(w2, roots) == bp_term(Q(1), 5, 1));
    CHECK(monomial_concrete(w3, roots) == bp_x(7));
}

TEST_CASE("correspondence is injective and satisfies the bounds") {
    ResolutionLedger L = ledger_from_char(make_char_data(12, {18, 22, 23}));
    for (int j = 2; j <= L.g() + 1; ++j) {
        std::set<std::vector<long>> seen;
        long ebound = L.e[j - 1];
        for (long r = 0; r <= 8; ++r)
            for (long s = 0; s < ebound; ++s) {
                auto w = monomial_correspondence(j, r, s, L);
                CHECK(w.i[0] > 0);
                for (int l = 1; l < j; ++l) {
                    CHECK(w.i[l] >= 0);
                    CHECK(w.i[l] < L.levels[l - 1].n);
                }
                CHECK(w.i[static_cast<size_t>(j)] == s);
                for (long kv : w.k) CHECK(kv > 0);
                CHECK(!seen.count(w.i));
                seen.insert(w.i);
                // inverse round-trip
                auto [rr, ss] = invert_correspondence(j, w.i, L);
                CHECK(rr == r);
                CHECK(ss == s);
            }
    }
}

TEST_CASE("monomial intersection numbers on the quartic") {
    SemigroupData S{{4, 6, 13}};
    CHECK(monomial_intersection(2, 0, 1, S) == 25);
    CHECK(monomial_intersection(2, 1, 0, S) == 26);
    CHECK(monomial_intersection(2, 0, 0, S) == 24);
}

TEST_CASE("order coherence: correspondence values match the oracle") {
    BiPoly f = quartic();
    ResolutionLedger L = quartic_ledger();
    std::vector<BiPoly> roots{bp_y(1), cusp()};
    auto ps = newton_puiseux(f, 120);
    REQUIRE(ps.size() == 1);
    for (int j = 2; j <= L.g() + 1; ++j)
        for (long r = 0; r <= 5; ++r)
            for (long s = 0; s < L.e[j - 1]; ++s) {
                auto w = monomial_correspondence(j, r, s, L);
                BiPoly M = monomial_concrete(w, roots);
                CHECK(ord_along(ps[0], M) == monomial_intersection(j, r, s, L.gens));
            }
}

TEST_CASE("newton polygon of correspondence monomials stays inside N(f)") {
    BiPoly f = quartic();
    ResolutionLedger L = quartic_ledger();
    std::vector<BiPoly> roots{bp_y(1), cusp()};
    NewtonPolygon Nf = newton_polygon(f);
    long level = Nf.edges[0].level;  // 2i + 3j = 12
    for (int j = 2; j <= L.g() + 1; ++j)
        for (long r = 0; r <= 4; ++r)
            for (long s = 0; s < L.e[j - 1]; ++s) {
                BiPoly M = monomial_concrete(monomial_correspondence(j, r, s, L), roots);
                bool interior_only = !(j == 2 && r == 0);
                for (const auto& [m, c] : M.terms()) {
                    long v = Nf.edges[0].p * m.i + Nf.edges[0].q * m.j;
                    if (interior_only)
                        CHECK(v > level);
                    else
                        CHECK(v >= level);
                }
            }
}

TEST_CASE("toric pullback worked examples") {
    LevelData lvl{1, 2, 3, 1, 1, {}};
    auto st = toric_pullback(cusp(), lvl);
    CHECK(st.exc_u == 2);
    CHECK(st.exc_x2 == 6);
    CHECK(st.body == bp_const(Q(1)) - bp_y(1));  // 1 - u

    auto st2 = toric_pullback(quartic(), lvl);
    CHECK(st2.exc_u == 4);
    CHECK(st2.exc_x2 == 12);
    BiPoly expect = (bp_const(Q(1)) - bp_y(1)) * (bp_const(Q(1)) - bp_y(1));
    expect -= Q(4) * bp_term(Q(1), 1, 2);
    expect -= bp_term(Q(1), 2, 3);
    CHECK(st2.body == expect);

    auto st3 = toric_pullback(bp_term(q_of(5, 7), 3, 4), lvl);
    CHECK(st3.body == bp_const(q_of(5, 7)));
}

TEST_CASE("strict transform chain on cusp and quartic") {
    {
        ResolutionLedger L = ledger_from_char(make_char_data(2, {3}));
        auto chain = strict_transform_chain(cusp(), L);
        REQUIRE(chain.size() == 1);
        CHECK(chain[0].level.theta == Q(1));
        CHECK(chain[0].transform.body == bp_const(Q(1)) - bp_y(1));
        CHECK(chain[0].translated == BiPoly() - bp_y(1));  // -v
    }
    {
        ResolutionLedger L = quartic_ledger();
        auto chain = strict_transform_chain(quartic(), L);
        REQUIRE(chain.size() == 2);
        CHECK(chain[0].level.theta == Q(1));
        // translated body: v^2 - 4(1+v)^2 x2 - (1+v)^3 x2^2
        BiPoly one_v = bp_const(Q(1)) + bp_y(1);
        BiPoly expect = bp_y(2) - Q(4) * one_v.pow(2) * bp_x(1) - one_v.pow(3) * bp_x(2);
        CHECK(chain[0].translated == expect);
        auto P = newton_polygon(chain[0].translated);
        REQUIRE(P.vertices.size() == 2);
        CHECK(P.vertices[0] == LatticePoint{0, 2});
        CHECK(P.vertices[1] == LatticePoint{1, 0});
        CHECK(chain[1].level.theta == Q(4));
    }
}

TEST_CASE("chain level data matches the shifted characteristic prediction") {
    // (6,8,25): strict transform should carry (e_1; b̄_2 - n_1 b̄_1) = (2; 1).
    PuiseuxParam p;
    p.n = 6;
    p.coeffs = {{8, Q(1)}, {9, Q(1)}};
    p.trunc = 64;
    p.exact = true;
    BiPoly f = implicitize(p);
    CharData c = char_exponents(p);
    ResolutionLedger L = ledger_from_char(c);
    auto chain = strict_transform_chain(f, L);
    REQUIRE(chain.size() == 2);
    // oracle on the translated body at level 1: chars (e_1; b̄_2 - n_1 b̄_1, ...)
    auto ps = newton_puiseux(chain[0].translated, 100);
    REQUIRE(ps.size() == 1);
    CharData c2 = char_exponents(ps[0]);
    CHECK(c2.n == c.e[1]);
    SemigroupData pred;
    pred.gens = {c.e[1], L.gens.gens[2] - c.nseq[0] * L.gens.gens[1]};
    CHECK(generators_from_char(c2).gens == pred.gens);
}

TEST_CASE("correspondence rejects out-of-range arguments") {
    ResolutionLedger L = quartic_ledger();
    CHECK_THROWS_AS(monomial_correspondence(2, 0, 5, L), domain_error);  // s >= e_1
    CHECK_THROWS_AS(monomial_correspondence(9, 0, 0, L), domain_error);
    CHECK_THROWS_AS(monomial_correspondence(2, -1, 0, L), domain_error);
    CHECK_THROWS_AS(monomial_intersection(2, 0, 7, SemigroupData{{4, 6, 13}}), domain_error);
}

TEST_CASE("strict transform chain rejects reducible input") {
    BiPoly f = (bp_y(2) - bp_x(3)) * (bp_y(2) - bp_x(5));
    ResolutionLedger L = ledger_from_char(make_char_data(4, {6, 7}));
    CHECK_THROWS_AS(strict_transform_chain(f, L), domain_error);
}
