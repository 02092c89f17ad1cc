#ifndef BRANCHFORGE_ALGEBRA_HPP
#define BRANCHFORGE_ALGEBRA_HPP

#include <utility>

#include "branchforge/poly.hpp"

namespace branchforge {

// --- generic univariate building blocks --------------------------------------

/// Division by a monic divisor: A = Q*B + R with deg R < deg B. Works over any
/// coefficient ring because no leading-coefficient inversion is needed.
template <class R>
std::pair<UPoly<R>, UPoly<R>> divmod_monic(const UPoly<R>& A, const UPoly<R>& B) {
    if (B.is_zero() || !(B.lead() == ring_one<R>()))
        throw domain_error("divmod_monic: divisor must be monic");
    UPoly<R> rem = A, quot;
    int db = B.deg();
    if (rem.deg() >= db) quot.c.resize(rem.deg() - db + 1);
    while (!rem.is_zero() && rem.deg() >= db) {
        int k = rem.deg() - db;
        R lead = rem.lead();
        quot.c[k] = quot.c[k] + lead;
        for (int t = 0; t <= db; ++t) rem.c[k + t] = rem.c[k + t] - lead * B.c[t];
        rem.trim();
    }
    quot.trim();
    return {quot, rem};
}

/// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
template <class R>
UPoly<R> prem(const UPoly<R>& A, const UPoly<R>& B) {
    if (B.is_zero()) throw domain_error("prem: division by zero");
    UPoly<R> rem = A;
    int db = B.deg();
    int e = A.deg() - db + 1;
    const R d = B.lead();
    while (!rem.is_zero() && rem.deg() >= db) {
        int k = rem.deg() - db;
        R lead = rem.lead();
        for (auto& rc : rem.c) rc = d * rc;
        for (int t = 0; t <= db; ++t) rem.c[k + t] = rem.c[k + t] - lead * B.c[t];
        rem.trim();
        --e;
    }
    R q = ring_one<R>();
    for (int t = 0; t < e; ++t) q = q * d;
    for (auto& rc : rem.c) rc = q * rc;
    rem.trim();
    return rem;
}

template <class R>
R ring_pow(R base, int e) {
    R r = ring_one<R>();
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

/// Resultant of A and B via the subresultant pseudo-remainder sequence.
/// The sign convention is the Sylvester determinant det Syl(A, B) with the
/// A-rows first; the unit tests pin this against direct determinants.
template <class R>
R resultant(UPoly<R> A, UPoly<R> B) {
    if (A.is_zero() || B.is_zero()) return R{};
    int sign = 1;
    if (A.deg() < B.deg()) {
        if ((A.deg() & 1) && (B.deg() & 1)) sign = -sign;
        std::swap(A, B);
    }
    if (A.deg() == 0) return ring_one<R>();  // two nonzero constants
    R g = ring_one<R>(), h = ring_one<R>();
    while (B.deg() > 0) {
        int delta = A.deg() - B.deg();
        if ((A.deg() & 1) && (B.deg() & 1)) sign = -sign;
        UPoly<R> rem = prem(A, B);
        A = B;
        R div = g * ring_pow(h, delta);
        B = rem;
        for (auto& bc : B.c) bc = exact_div(bc, div);
        B.trim();
        if (B.is_zero()) return R{};  // common factor
        g = A.lead();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = exact_div(ring_pow(g, delta), ring_pow(h, delta - 1));
        // delta == 0: h unchanged
    }
    R res = exact_div(ring_pow(B.c[0], A.deg()), ring_pow(h, A.deg() - 1));
    if (sign < 0) res = R{} - res;
    return res;
}

// --- integer coefficient ring for the resultant fast path ---------------------

/// Dense univariate integer polynomials; the subresultant chain stays in Z[x]
/// after denominators are cleared, which keeps the gmp work on mpz.
struct ZPolyX {
    std::vector<Z> c;

    void trim() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    friend ZPolyX operator+(const ZPolyX& a, const ZPolyX& b) {
        ZPolyX r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (size_t k = 0; k < r.c.size(); ++k) {
            if (k < a.c.size()) r.c[k] += a.c[k];
            if (k < b.c.size()) r.c[k] += b.c[k];
        }
        r.trim();
        return r;
    }
    friend ZPolyX operator-(const ZPolyX& a, const ZPolyX& b) {
        ZPolyX r;
        r.c.resize(std::max(a.c.size(), b.c.size()));
        for (size_t k = 0; k < r.c.size(); ++k) {
            if (k < a.c.size()) r.c[k] += a.c[k];
            if (k < b.c.size()) r.c[k] -= b.c[k];
        }
        r.trim();
        return r;
    }
    friend ZPolyX operator*(const ZPolyX& a, const ZPolyX& b) {
        ZPolyX r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, Z(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (sgn(a.c[i]) == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    bool operator==(const ZPolyX& o) const { return c == o.c; }
};

template <>
inline ZPolyX ring_one<ZPolyX>() {
    return ZPolyX{{Z(1)}};
}

inline bool ring_is_zero(const ZPolyX& a) { return a.is_zero(); }

/// Exact division in Z[x]; throws when not exact.
ZPolyX exact_div(const ZPolyX& a, const ZPolyX& b);

// --- spec-level operations on BiPoly ------------------------------------------

bool is_monic_in_y(const BiPoly& p);
bool is_weierstrass(const BiPoly& p);  // monic in y and f(0, y) = y^N

/// Euclidean division in y by a monic divisor; exact coefficients.
std::pair<BiPoly, BiPoly> euclid_div_y(const BiPoly& A, const BiPoly& B);

/// Sylvester resultant eliminating y; returns an x-only polynomial.
BiPoly resultant_y(const BiPoly& A, const BiPoly& B);

/// Intersection multiplicity (f, h)_0 = ord_x Res_y(f, h).
/// Throws domain_error("non-coprime") when the resultant vanishes identically.
int intersection_mult(const BiPoly& f, const BiPoly& h);

BiPoly partial_y(const BiPoly& p);
BiPoly partial_x(const BiPoly& p);
FamPoly partial_y(const FamPoly& p);

/// Specialization lambda = 0 (and a general rational lambda for sampling).
BiPoly eval_lambda0(const FamPoly& F);
BiPoly eval_lambda(const FamPoly& F, const Q& value);

/// Exact composition A(xexpr, yexpr).
BiPoly substitute(const BiPoly& A, const BiPoly& xexpr, const BiPoly& yexpr);

/// Lift a BiPoly into the family ring (no lambda dependence).
FamPoly lift_fam(const BiPoly& p);

/// Direct Sylvester-determinant resultant (fraction-free Gauss/Bareiss); used
/// as the independent check for the subresultant chain on small inputs.
BiPoly resultant_y_sylvester(const BiPoly& A, const BiPoly& B);

}  // namespace branchforge

#endif
