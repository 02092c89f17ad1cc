#ifndef BRANCHFORGE_POLY_HPP
#define BRANCHFORGE_POLY_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "branchforge/rational.hpp"

namespace branchforge {

// ---------------------------------------------------------------------------
// Sparse exact polynomials.
//
// BiPoly:  Q[x][y], exponent pairs (i, j) = (x, y).
// FamPoly: Q[l][x][y], exponent triples (k, i, j) = (l, x, y); the first slot
//          is the deformation parameter (lambda), but the same container also
//          serves for other variable pairs/triples (e.g. (t, x) resultants)
//          where the caller documents the slot meaning.
//
// Invariant for both: no zero coefficients are stored, so support iteration
// and equality are canonical.
// ---------------------------------------------------------------------------

struct Mono2 {
    int i = 0;  // x exponent
    int j = 0;  // y exponent
    auto operator<=>(const Mono2&) const = default;
};

struct Mono3 {
    int k = 0;  // lambda exponent
    int i = 0;  // x exponent
    int j = 0;  // y exponent
    auto operator<=>(const Mono3&) const = default;
};

template <class MonoT>
class SparsePoly {
public:
    using Mono = MonoT;
    using Map = std::map<Mono, Q>;

    SparsePoly() = default;

    static SparsePoly zero() { return SparsePoly(); }

    static SparsePoly constant(const Q& c) {
        SparsePoly p;
        if (!branchforge::is_zero(c)) p.terms_.emplace(Mono{}, c);
        return p;
    }

    static SparsePoly monomial(const Mono& m, const Q& c) {
        SparsePoly p;
        if (!branchforge::is_zero(c)) p.terms_.emplace(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    const Map& terms() const { return terms_; }

    Q coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Q(0) : it->second;
    }

    void add_term(const Mono& m, const Q& c) {
        if (branchforge::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (branchforge::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend SparsePoly operator-(const SparsePoly& a) {
        SparsePoly r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    friend SparsePoly operator*(const Q& c, const SparsePoly& a) {
        SparsePoly r;
        if (branchforge::is_zero(c)) return r;
        for (const auto& [m, ca] : a.terms_) r.terms_.emplace(m, c * ca);
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& b) { return *this = *this + b; }
    SparsePoly& operator-=(const SparsePoly& b) { return *this = *this - b; }
    SparsePoly& operator*=(const SparsePoly& b) { return *this = *this * b; }

    SparsePoly pow(int e) const {
        SparsePoly r = constant(Q(1));
        SparsePoly base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

private:
    static Mono2 mono_mul(const Mono2& a, const Mono2& b) { return {a.i + b.i, a.j + b.j}; }
    static Mono3 mono_mul(const Mono3& a, const Mono3& b) {
        return {a.k + b.k, a.i + b.i, a.j + b.j};
    }

    Map terms_;
};

using BiPoly = SparsePoly<Mono2>;
using FamPoly = SparsePoly<Mono3>;

// --- convenience constructors ----------------------------------------------

inline BiPoly bp_x(int e = 1) { return BiPoly::monomial({e, 0}, Q(1)); }
inline BiPoly bp_y(int e = 1) { return BiPoly::monomial({0, e}, Q(1)); }
inline BiPoly bp_const(const Q& c) { return BiPoly::constant(c); }
inline BiPoly bp_term(const Q& c, int i, int j) { return BiPoly::monomial({i, j}, c); }
inline FamPoly fp_term(const Q& c, int k, int i, int j) { return FamPoly::monomial({k, i, j}, c); }

// --- degrees ----------------------------------------------------------------

inline int deg_y(const BiPoly& p) {
    int d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.j);
    return d;  // -1 for the zero polynomial
}

inline int deg_x(const BiPoly& p) {
    int d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.i);
    return d;
}

inline int deg_y(const FamPoly& p) {
    int d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.j);
    return d;
}

inline int deg_x(const FamPoly& p) {
    int d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.i);
    return d;
}

inline int deg_lambda(const FamPoly& p) {
    int d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.k);
    return d;
}

/// ord_x of a polynomial viewed along the x-axis; -1 when zero.
inline int ord_x(const BiPoly& p) {
    int o = -1;
    for (const auto& [m, c] : p.terms()) o = (o < 0) ? m.i : std::min(o, m.i);
    return o;
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over a ring R (Q, BiPoly or FamPoly). Used as
// the working form for every main-variable algorithm: Euclidean division,
// H-adic expansions, pseudo-division and subresultants.
// ---------------------------------------------------------------------------

inline bool ring_is_zero(const Q& a) { return branchforge::is_zero(a); }
inline bool ring_is_zero(const BiPoly& a) { return a.is_zero(); }
inline bool ring_is_zero(const FamPoly& a) { return a.is_zero(); }

template <class R>
struct UPoly {
    std::vector<R> c;  // c[k] is the coefficient of the main variable^k

    UPoly() = default;
    explicit UPoly(std::vector<R> cs) : c(std::move(cs)) { trim(); }

    void trim() {
        while (!c.empty() && ring_is_zero(c.back())) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }

    const R& lead() const { return c.back(); }
};

template <class R>
UPoly<R> operator+(const UPoly<R>& a, const UPoly<R>& b) {
    UPoly<R> r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t k = 0; k < r.c.size(); ++k) {
        if (k < a.c.size()) r.c[k] = r.c[k] + a.c[k];
        if (k < b.c.size()) r.c[k] = r.c[k] + b.c[k];
    }
    r.trim();
    return r;
}

template <class R>
UPoly<R> operator-(const UPoly<R>& a, const UPoly<R>& b) {
    UPoly<R> r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t k = 0; k < r.c.size(); ++k) {
        if (k < a.c.size()) r.c[k] = r.c[k] + a.c[k];
        if (k < b.c.size()) r.c[k] = r.c[k] - b.c[k];
    }
    r.trim();
    return r;
}

template <class R>
UPoly<R> operator*(const UPoly<R>& a, const UPoly<R>& b) {
    UPoly<R> r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.resize(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (ring_is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

template <class R>
UPoly<R> upoly_scale(const R& s, const UPoly<R>& a) {
    UPoly<R> r = a;
    for (auto& ck : r.c) ck = s * ck;
    r.trim();
    return r;
}

template <class R>
R ring_one();
template <>
inline Q ring_one<Q>() {
    return Q(1);
}
template <>
inline BiPoly ring_one<BiPoly>() {
    return BiPoly::constant(Q(1));
}
template <>
inline FamPoly ring_one<FamPoly>() {
    return FamPoly::constant(Q(1));
}

template <class R>
UPoly<R> upoly_pow(const UPoly<R>& a, int e) {
    UPoly<R> r;
    r.c = {ring_one<R>()};
    UPoly<R> base = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

// --- conversions between the sparse and main-variable forms -----------------

/// y-coefficients of a BiPoly; each coefficient is an x-only BiPoly.
inline UPoly<BiPoly> ycoeffs(const BiPoly& p) {
    UPoly<BiPoly> r;
    r.c.resize(static_cast<size_t>(std::max(0, deg_y(p) + 1)));
    for (const auto& [m, c] : p.terms()) r.c[m.j].add_term({m.i, 0}, c);
    r.trim();
    return r;
}

inline BiPoly from_ycoeffs(const UPoly<BiPoly>& u) {
    BiPoly p;
    for (size_t j = 0; j < u.c.size(); ++j)
        for (const auto& [m, c] : u.c[j].terms()) p.add_term({m.i, static_cast<int>(j)}, c);
    return p;
}

/// y-coefficients of a FamPoly; coefficients keep the (lambda, x) slots.
inline UPoly<FamPoly> ycoeffs(const FamPoly& p) {
    UPoly<FamPoly> r;
    r.c.resize(static_cast<size_t>(std::max(0, deg_y(p) + 1)));
    for (const auto& [m, c] : p.terms()) r.c[m.j].add_term({m.k, m.i, 0}, c);
    r.trim();
    return r;
}

inline FamPoly from_ycoeffs(const UPoly<FamPoly>& u) {
    FamPoly p;
    for (size_t j = 0; j < u.c.size(); ++j)
        for (const auto& [m, c] : u.c[j].terms()) p.add_term({m.k, m.i, static_cast<int>(j)}, c);
    return p;
}

// --- multivariate exact division (used by the subresultant chain) -----------

/// Exact division a / b in the sparse ring; throws domain_error when the
/// division is not exact. Leading-term elimination in the map order.
template <class MonoT>
SparsePoly<MonoT> exact_div(const SparsePoly<MonoT>& a, const SparsePoly<MonoT>& b) {
    if (b.is_zero()) throw domain_error("exact_div: division by zero");
    SparsePoly<MonoT> rem = a, quot;
    const auto& bl = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms().rbegin();
        MonoT m = mono_div(rl.first, bl.first);
        Q c = rl.second / bl.second;
        quot.add_term(m, c);
        rem -= SparsePoly<MonoT>::monomial(m, c) * b;
    }
    return quot;
}

inline Mono2 mono_div(const Mono2& a, const Mono2& b) {
    if (a.i < b.i || a.j < b.j) throw domain_error("exact_div: not divisible");
    return {a.i - b.i, a.j - b.j};
}

inline Mono3 mono_div(const Mono3& a, const Mono3& b) {
    if (a.k < b.k || a.i < b.i || a.j < b.j) throw domain_error("exact_div: not divisible");
    return {a.k - b.k, a.i - b.i, a.j - b.j};
}

inline Q exact_div(const Q& a, const Q& b) {
    if (branchforge::is_zero(b)) throw domain_error("exact_div: division by zero");
    return a / b;
}

// --- printing ----------------------------------------------------------------

std::string to_string(const BiPoly& p);
std::string to_string(const FamPoly& p);

}  // namespace branchforge

#endif
