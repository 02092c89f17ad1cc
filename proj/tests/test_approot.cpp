#include <doctest.h>

#include <set>

#include "branchforge/approot.hpp"
#include "branchforge/newton.hpp"
#include "branchforge/puiseux.hpp"
#include "support.hpp"

using namespace branchforge;
using namespace branchforge::testsupport;

TEST_CASE("h_adic worked examples") {
    // (y^2 + 2y + x, y) -> a_0 = 1, a_1 = 2, a_2 = x
    BiPoly F = bp_y(2) + Q(2) * bp_y(1) + bp_x(1);
    auto a = h_adic(F, bp_y(1));
    REQUIRE(a.size() == 3);
    CHECK(a[0] == bp_const(Q(1)));
    CHECK(a[1] == bp_const(Q(2)));
    CHECK(a[2] == bp_x(1));

    // (quartic, y^2 - x^3) -> 1, 0, -4x^5 y - x^7
    auto b = h_adic(quartic(), cusp());
    REQUIRE(b.size() == 3);
    CHECK(b[0] == bp_const(Q(1)));
    CHECK(b[1].is_zero());
    CHECK(b[2] == BiPoly() - bp_term(Q(4), 5, 1) - bp_term(Q(1), 7, 0));

    // (H, H) -> a_0 = 1, a_1 = 0
    auto c = h_adic(cusp(), cusp());
    REQUIRE(c.size() == 2);
    CHECK(c[0] == bp_const(Q(1)));
    CHECK(c[1].is_zero());
}

TEST_CASE("h_adic reconstruction on random inputs") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        BiPoly H = random_monic_y(rng, 2, 2);
        BiPoly F = random_bipoly(rng, 3, 5);
        auto a = h_adic(F, H);
        BiPoly acc;
        int s = static_cast<int>(a.size()) - 1;
        for (int k = 0; k <= s; ++k) {
            CHECK(deg_y(a[k]) < deg_y(H));
            acc += a[k] * H.pow(s - k);
        }
        CHECK(acc == F);
    }
}

TEST_CASE("tschirnhausen worked examples") {
    BiPoly F = bp_y(2) + Q(2) * bp_y(1) + bp_x(1);
    CHECK(tschirnhausen(F, bp_y(1)) == bp_y(1) + bp_const(Q(1)));

    BiPoly F2 = cusp() * cusp();
    CHECK(tschirnhausen(F2, cusp()) == cusp());  // fixpoint

    BiPoly F3 = bp_y(4) - Q(2) * bp_term(Q(1), 3, 2);
    CHECK(tschirnhausen(F3, bp_y(2)) == cusp());
}

TEST_CASE("approximate roots of the quartic") {
    BiPoly f = quartic();
    CHECK(approximate_root(f, 2) == cusp());
    CHECK(approximate_root(f, 1) == bp_y(1));
    CHECK(approximate_root(bp_y(6), 3) == bp_y(3));
    CHECK(approximate_root(bp_y(6), 2) == bp_y(2));
}

TEST_CASE("defining inequality holds for computed approximate roots") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 30; ++trial) {
        BiPoly F = random_monic_y(rng, 6, 3);
        for (int m : {1, 2, 3, 6}) {
            BiPoly G = approximate_root(F, m);
            CHECK(deg_y(G) == m);
            BiPoly diff = F - G.pow(6 / m);
            CHECK((diff.is_zero() || deg_y(diff) < 6 - m));
        }
    }
}

TEST_CASE("multi-adic expansion examples") {
    std::vector<BiPoly> roots{bp_y(1), cusp()};
    auto e = multi_adic(quartic(), roots);
    REQUIRE(e.terms.size() == 3);
    CHECK(e.terms.at({0, 2}) == bp_const(Q(1)));
    CHECK(e.terms.at({1, 0}) == Q(-4) * bp_x(5));
    CHECK(e.terms.at({0, 0}) == BiPoly() - bp_x(7));

    auto e2 = multi_adic(bp_y(1), {bp_y(1)});
    REQUIRE(e2.terms.size() == 1);
    CHECK(e2.terms.at({1}) == bp_const(Q(1)));

    auto e3 = multi_adic(bp_x(1), roots);
    REQUIRE(e3.terms.size() == 1);
    CHECK(e3.terms.at({0, 0}) == bp_x(1));
}

TEST_CASE("multi-adic reconstruction and distinct y-degrees") {
    std::mt19937_64 rng(4242);
    std::vector<BiPoly> roots{bp_y(1), cusp(), quartic()};
    for (int trial = 0; trial < 25; ++trial) {
        BiPoly F = random_bipoly(rng, 4, 7, 0.4);
        if (F.is_zero()) continue;
        auto e = multi_adic(F, roots);
        CHECK(multi_adic_reconstruct(e, roots) == F);
        // q_I = i_1 + n_1 i_2 + ... distinct <=> y-degrees of the products distinct.
        std::set<int> degs;
        for (const auto& [I, c] : e.terms) {
            int d = I[0] * 1 + I[1] * 2 + I[2] * 4;
            CHECK(!degs.count(d));
            degs.insert(d);
        }
    }
}

TEST_CASE("semiroot checks on the quartic") {
    BiPoly f = quartic();
    std::vector<long> gens{4, 6, 13};
    CHECK(semiroot_check(f, cusp(), 2, gens));
    CHECK(semiroot_check(f, bp_y(1), 1, gens));
    CHECK(semiroot_check(cusp(), bp_y(1) - bp_x(2), 1, {2, 3}));
}

TEST_CASE("semiroot checks are invariant under nonzero scaling of the root") {
    BiPoly f = quartic();
    std::vector<long> gens{4, 6, 13};
    // (C_j, C)_0 is unchanged by constant scaling; degree too.
    BiPoly scaled = q_of(7, 3) * cusp();
    CHECK(intersection_mult(f, scaled) == 13);
    CHECK(deg_y(scaled) == 2);
}

TEST_CASE("approximate roots realize the semigroup generators along the branch") {
    // Abhyankar-Moh: the degree-(n_0...n_{j-1}) approximate root meets the
    // branch with multiplicity b̄_j.
    PuiseuxParam p;
    p.n = 8;
    p.coeffs = {{12, Q(1)}, {26, Q(1)}, {27, Q(1)}};
    p.trunc = 300;
    p.exact = true;
    BiPoly f = implicitize(p);
    SemigroupData gens = generators_from_char(char_exponents(p));
    REQUIRE(gens.gens.size() == 4);
    long degree = 1;
    auto e = gens.e_chain();
    for (int j = 1; j <= gens.g(); ++j) {
        degree = gens.gens[0] / e[j - 1];
        BiPoly root = approximate_root(f, static_cast<int>(degree));
        CHECK(ord_along(p, root) == gens.gens[j]);
        CHECK(semiroot_check(f, root, j, gens.gens));
    }
    CHECK(ord_along(p, f - f + bp_y(1)) == gens.gens[1]);
}

TEST_CASE("single-edge approximate roots restrict to the matching edge power") {
    // f = (y^2 - theta x^3)^4 + interior terms: the degree-2m approximate root
    // restricts to (y^2 - theta x^3)^m on the shared edge.
    PuiseuxParam p;
    p.n = 8;
    p.coeffs = {{12, Q(1)}, {26, Q(1)}, {27, Q(1)}};
    p.trunc = 300;
    p.exact = true;
    BiPoly f = implicitize(p);
    auto edge = single_edge_check(newton_polygon(f));
    REQUIRE(edge.has_value());
    CHECK(edge->n == 2);
    CHECK(edge->m == 3);
    CHECK(edge->e == 4);
    BiPoly base = symbolic_restriction(f, 2, 3);  // (y^2 - theta x^3)^4
    for (int m : {1, 2}) {
        BiPoly G = approximate_root(f, 2 * m);
        BiPoly expect = approximate_root(base, 2 * m);  // (y^2 - theta x^3)^m
        CHECK(symbolic_restriction(G, 2, 3) == expect);
        CHECK(expect.pow(4 / m) == base);
    }
}

TEST_CASE("expansion error paths") {
    CHECK_THROWS_AS(h_adic(bp_y(2), Q(2) * bp_y(1)), domain_error);
    CHECK_THROWS_AS(tschirnhausen(bp_y(3), bp_y(2)), domain_error);  // 2 does not divide 3
    CHECK_THROWS_AS(approximate_root(bp_y(4), 3), domain_error);
}
