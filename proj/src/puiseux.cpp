#include "branchforge/puiseux.hpp"

#include <algorithm>
#include <numeric>

#include "branchforge/newton.hpp"

namespace branchforge {

// --- rational root isolation -----------------------------------------------------

namespace {

Q upoly_eval(const UPoly<Q>& P, const Q& v) {
    Q acc(0);
    for (int k = P.deg(); k >= 0; --k) acc = acc * v + P.c[k];
    return acc;
}

UPoly<Q> upoly_derivative(const UPoly<Q>& P) {
    UPoly<Q> r;
    if (P.deg() < 1) return r;
    r.c.resize(P.c.size() - 1);
    for (size_t k = 1; k < P.c.size(); ++k) r.c[k - 1] = Q(static_cast<long>(k)) * P.c[k];
    r.trim();
    return r;
}

UPoly<Q> upoly_rem_field(UPoly<Q> A, const UPoly<Q>& B) {
    while (!A.is_zero() && A.deg() >= B.deg()) {
        Q f = A.lead() / B.lead();
        int k = A.deg() - B.deg();
        for (int t = 0; t <= B.deg(); ++t) A.c[k + t] -= f * B.c[t];
        A.trim();
    }
    return A;
}

UPoly<Q> upoly_gcd_field(UPoly<Q> A, UPoly<Q> B) {
    while (!B.is_zero()) {
        UPoly<Q> r = upoly_rem_field(A, B);
        A = B;
        B = r;
    }
    if (!A.is_zero()) {
        Q inv = Q(1) / A.lead();
        for (auto& c : A.c) c *= inv;
    }
    return A;
}

std::vector<UPoly<Q>> sturm_chain(const UPoly<Q>& P) {
    std::vector<UPoly<Q>> s;
    s.push_back(P);
    s.push_back(upoly_derivative(P));
    while (!s.back().is_zero() && s.back().deg() >= 0) {
        UPoly<Q> r = upoly_rem_field(s[s.size() - 2], s.back());
        if (r.is_zero()) break;
        for (auto& c : r.c) c = -c;
        s.push_back(r);
        if (s.back().deg() == 0) break;
    }
    return s;
}

int sign_variations(const std::vector<UPoly<Q>>& chain, const Q& v) {
    int var = 0, prev = 0;
    for (const auto& P : chain) {
        if (P.is_zero()) continue;
        int sg = sgn(upoly_eval(P, v));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

/// Rational with the smallest denominator in the closed interval [lo, hi].
Q simplest_between(const Q& lo, const Q& hi) {
    Z lo_ceil = lo.get_num() / lo.get_den();
    if (lo_ceil * lo.get_den() < lo.get_num()) lo_ceil += 1;
    Z hi_floor = hi.get_num() / hi.get_den();
    if (hi_floor * hi.get_den() > hi.get_num()) hi_floor -= 1;
    if (lo_ceil <= hi_floor) {
        // an integer lies inside; pick the one closest to zero for determinism
        Z pick = lo_ceil;
        if (lo_ceil < 0 && hi_floor >= 0) pick = 0;
        else if (abs(hi_floor) < abs(pick)) pick = hi_floor;
        Q r(pick);
        return r;
    }
    Z n = lo.get_num() / lo.get_den();  // floor for positive gaps
    if (Q(n) > lo) n -= 1;
    Q fl = lo - Q(n), fh = hi - Q(n);  // 0 < fl <= fh < 1
    Q inner = simplest_between(Q(1) / fh, Q(1) / fl);
    return Q(n) + Q(1) / inner;
}

// Intervals are open (lo, hi) with non-root endpoints throughout.
void isolate_and_collect(const std::vector<UPoly<Q>>& chain, const UPoly<Q>& S, Q lo, Q hi,
                         int count, const Z& denom_bound, std::vector<Q>& roots) {
    if (count == 0) return;
    // A single root in an interval narrower than the 1/(2 L^2) separation of
    // denominator-<=-L rationals: reconstruct the candidate and verify.
    if (count == 1) {
        Q width = hi - lo;
        Q sep = Q(1) / Q(2 * denom_bound * denom_bound);
        if (width <= sep) {
            Q cand = simplest_between(lo, hi);
            if (cand > lo && cand < hi && cand.get_den() <= denom_bound &&
                is_zero(upoly_eval(S, cand)))
                roots.push_back(cand);
            return;  // otherwise the single root is irrational
        }
    }
    // Cut at a non-root point; at most deg S roots, so some candidate works.
    Q mid;
    bool found_cut = false;
    for (long k = 1; k <= S.deg() + 1 && !found_cut; ++k) {
        mid = lo + (hi - lo) * Q(k) / Q(S.deg() + 2);
        if (!is_zero(upoly_eval(S, mid))) found_cut = true;
    }
    if (!found_cut) throw domain_error("rational_roots: no root-free cut point");
    int left = sign_variations(chain, lo) - sign_variations(chain, mid);
    isolate_and_collect(chain, S, lo, mid, left, denom_bound, roots);
    isolate_and_collect(chain, S, mid, hi, count - left, denom_bound, roots);
}

}  // namespace

std::vector<std::pair<Q, int>> rational_roots(const UPoly<Q>& P) {
    if (P.is_zero()) throw domain_error("rational_roots: zero polynomial");
    std::vector<std::pair<Q, int>> out;
    if (P.deg() == 0) return out;
    if (P.deg() == 1) {
        out.emplace_back(-P.c[0] / P.c[1], 1);
        return out;
    }
    // Square-free part.
    UPoly<Q> S = P;
    UPoly<Q> g = upoly_gcd_field(P, upoly_derivative(P));
    if (g.deg() >= 1) {
        auto [q, r] = [&] {
            UPoly<Q> A = P;
            UPoly<Q> quot;
            quot.c.resize(A.c.size());
            while (!A.is_zero() && A.deg() >= g.deg()) {
                Q f = A.lead() / g.lead();
                int k = A.deg() - g.deg();
                quot.c[k] = f;
                for (int t = 0; t <= g.deg(); ++t) A.c[k + t] -= f * g.c[t];
                A.trim();
            }
            quot.trim();
            return std::pair(quot, A);
        }();
        (void)r;
        S = q;
    }
    // Clear denominators to a primitive integer polynomial for the
    // denominator bound q | lc.
    Z den(1);
    for (const auto& c : S.c) {
        Z d = c.get_den();
        den = den / z_gcd(den, d) * d;
    }
    UPoly<Q> Sz = S;
    for (auto& c : Sz.c) c *= Q(den);
    Z content(0);
    for (const auto& c : Sz.c) content = z_gcd(content, c.get_num());
    if (content > 1)
        for (auto& c : Sz.c) c /= Q(content);
    Z L = abs(Sz.lead().get_num());

    auto chain = sturm_chain(Sz);
    // Cauchy bound.
    Q bound(1);
    for (const auto& c : Sz.c) {
        Q a = abs(c) / abs(Sz.lead());
        if (a > bound) bound = a;
    }
    bound += 1;
    std::vector<Q> roots;
    // Cauchy: every root lies strictly inside (-bound, bound).
    int total = sign_variations(chain, -bound) - sign_variations(chain, bound);
    isolate_and_collect(chain, Sz, -bound, bound, total, L, roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    // Multiplicities from the original polynomial.
    for (const Q& r : roots) {
        UPoly<Q> cur = P;
        int mult = 0;
        while (true) {
            // synthetic division by (w - r)
            if (cur.deg() < 1) break;
            std::vector<Q> q(static_cast<size_t>(cur.deg()));
            Q carry(0);
            for (int k = cur.deg(); k >= 1; --k) {
                carry = cur.c[k] + carry * r;
                q[static_cast<size_t>(k - 1)] = carry;
            }
            Q rem = cur.c[0] + carry * r;
            if (!is_zero(rem)) break;
            ++mult;
            cur = UPoly<Q>(q);
        }
        if (mult == 0) throw domain_error("rational_roots: internal verification failed");
        out.emplace_back(r, mult);
    }
    return out;
}

// --- Newton-Puiseux ---------------------------------------------------------------

namespace {

struct RawBranch {
    long ram = 1;            // x = t^ram
    std::map<int, Q> coeffs; // y(t)
};

int min_y_exponent(const BiPoly& g) {
    int k = -1;
    for (const auto& [m, c] : g.terms()) k = (k < 0) ? m.j : std::min(k, m.j);
    return k;
}

BiPoly shift_y_down(const BiPoly& g, int k) {
    BiPoly r;
    for (const auto& [m, c] : g.terms()) r.add_term({m.i, m.j - k}, c);
    return r;
}

/// g(x^p, x^q (c + y)) / x^level, keeping x-exponents <= xcap.
BiPoly edge_substitute(const BiPoly& g, long p, long q, const Q& c, long level, int xcap) {
    BiPoly r;
    for (const auto& [m, co] : g.terms()) {
        long e0 = p * m.i + q * m.j;
        if (e0 - level > xcap) continue;
        // (c + y)^j = sum_k C(j,k) c^{j-k} y^k, built from the top term down.
        std::vector<Q> row(static_cast<size_t>(m.j) + 1);
        row[static_cast<size_t>(m.j)] = Q(1);
        for (int k = m.j - 1; k >= 0; --k)
            row[static_cast<size_t>(k)] =
                row[static_cast<size_t>(k + 1)] * c * Q(k + 1) / Q(m.j - k);
        for (int k = 0; k <= m.j; ++k)
            r.add_term({static_cast<int>(e0 - level), k}, co * row[static_cast<size_t>(k)]);
    }
    return r;
}

/// Unique regular solution y(x) with y(0) = 0 when g_y(0,0) != 0; coefficients
/// of x^1 .. x^K by Newton iteration with doubling precision.
std::map<int, Q> hensel_solve(const BiPoly& g, int K) {
    BiPoly gy = partial_y(g);
    QSeries y = QSeries::zero(0);  // correct mod x^1
    int m = 1;                     // y is correct modulo x^m
    const int target = K + 1;
    while (m < target) {
        int next = std::min(2 * m, target);
        QSeries ycur = series_retrunc(y, next - 1);
        QSeries xcur = QSeries::monomial(Q(1), 1, next - 1);
        QSeries val = series_eval(g, xcur, ycur);
        QSeries der = series_eval(gy, xcur, ycur);
        y = series_sub(ycur, series_mul(val, series_inv(der)));
        m = next;
    }
    std::map<int, Q> out;
    for (int e = 1; e <= K; ++e)
        if (!is_zero(y.coeff(e))) out[e] = y.coeff(e);
    return out;
}

void solve_branches(const BiPoly& g_in, int tcap, std::vector<RawBranch>& out) {
    BiPoly g = g_in;
    if (g.is_zero()) throw domain_error("newton_puiseux: zero polynomial");
    // x = 0 must not be a component.
    if (ord_x(g) > 0) throw domain_error("newton_puiseux: x divides the input");
    int k = min_y_exponent(g);
    if (k >= 2) throw domain_error("not square-free");
    if (k == 1) {
        out.push_back(RawBranch{1, {}});  // the branch y = 0
        g = shift_y_down(g, 1);
    }
    if (!is_zero(g.coeff({0, 0}))) return;  // unit: no further branches at the origin
    if (deg_y(g) == 0) throw domain_error("newton_puiseux: internal: x-only residual");

    // Regular point: a single smooth branch.
    if (!is_zero(partial_y(g).coeff({0, 0}))) {
        out.push_back(RawBranch{1, hensel_solve(g, tcap)});
        return;
    }

    NewtonPolygon P = newton_polygon(g);
    for (const auto& edge : P.edges) {
        long p = edge.p, q = edge.q;
        long d = edge.lattice_len;
        // Edge polynomial psi(w) = sum c_k w^{d-k}, w standing for y^p / x^q.
        UPoly<Q> psi;
        psi.c.resize(static_cast<size_t>(d) + 1);
        for (long kk = 0; kk <= d; ++kk) {
            Mono2 m{static_cast<int>(edge.from.i + kk * q), static_cast<int>(edge.from.j - kk * p)};
            psi.c[static_cast<size_t>(d - kk)] = g.coeff(m);
        }
        psi.trim();
        for (const auto& [gamma, mult] : rational_roots(psi)) {
            (void)mult;                    // the recursion resolves multiple branches itself
            if (is_zero(gamma)) continue;  // excluded by the vertex coefficients
            std::vector<Q> cs;
            if (p % 2 == 1) {
                if (auto c = q_kth_root(gamma, static_cast<unsigned long>(p))) cs.push_back(*c);
            } else if (sgn(gamma) > 0) {
                if (auto c = q_kth_root(gamma, static_cast<unsigned long>(p))) {
                    cs.push_back(*c);
                    cs.push_back(-*c);
                }
            }
            // No rational p-th root: the whole gamma-group is outside the
            // rational scope; prune (completeness is checked by the caller).
            for (const Q& c : cs) {
                BiPoly g2 = edge_substitute(g, p, q, c, edge.level, tcap);
                std::vector<RawBranch> subs;
                solve_branches(g2, tcap, subs);
                for (const auto& sb : subs) {
                    RawBranch lifted;
                    lifted.ram = p * sb.ram;
                    long base = q * sb.ram;
                    if (base <= tcap) lifted.coeffs[static_cast<int>(base)] = c;
                    for (const auto& [e, v] : sb.coeffs) {
                        long ee = base + e;
                        if (ee <= tcap) lifted.coeffs[static_cast<int>(ee)] += v;
                    }
                    // base-collision with sb entries cannot happen (sb exponents >= 1)
                    out.push_back(std::move(lifted));
                }
            }
        }
    }
}

std::map<int, Q> flipped(const std::map<int, Q>& coeffs) {
    std::map<int, Q> r;
    for (const auto& [e, v] : coeffs) r[e] = (e % 2 == 0) ? v : -v;
    return r;
}

bool coeffs_less(const std::map<int, Q>& a, const std::map<int, Q>& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return a.size() < b.size();
}

}  // namespace

int default_trunc(const BiPoly& f) {
    int dx = std::max(1, deg_x(f));
    int dy = std::max(1, deg_y(f));
    return 2 * dx * dy;
}

std::vector<PuiseuxParam> newton_puiseux(const BiPoly& f, int trunc) {
    if (f.is_zero() || deg_y(f) < 1) throw domain_error("newton_puiseux: need positive y-degree");
    if (!is_zero(f.coeff({0, 0}))) throw domain_error("newton_puiseux: f(0,0) != 0");
    if (ord_x(f) > 0) throw domain_error("newton_puiseux: x divides f");
    std::vector<RawBranch> raw;
    solve_branches(f, trunc, raw);
    // Canonicalize under t -> -t (only for even ramification) and deduplicate.
    std::vector<PuiseuxParam> params;
    for (auto& rb : raw) {
        PuiseuxParam p;
        p.n = rb.ram;
        p.trunc = trunc;
        p.coeffs = rb.coeffs;
        if (rb.ram % 2 == 0) {
            auto fl = flipped(rb.coeffs);
            if (coeffs_less(fl, p.coeffs)) p.coeffs = fl;
        }
        bool dup = false;
        for (const auto& other : params)
            if (other.n == p.n && other.coeffs == p.coeffs) dup = true;
        if (!dup) params.push_back(std::move(p));
    }
    // Completeness: total ramification must equal ord_y f(0, y).
    long total = 0;
    for (const auto& p : params) total += p.n;
    long expected = -1;
    for (const auto& [m, c] : f.terms())
        if (m.i == 0) expected = (expected < 0) ? m.j : std::min<long>(expected, m.j);
    if (total != expected)
        throw oracle_error("irrational-coefficient branch: recovered ramification " +
                           std::to_string(total) + " of " + std::to_string(expected));
    return params;
}

int ord_along(const PuiseuxParam& p, const BiPoly& h) {
    if (h.is_zero()) throw domain_error("ord_along: zero polynomial");
    int cap = p.trunc;
    int K = std::min(cap, 64);
    while (true) {
        QSeries xs = QSeries::monomial(Q(1), static_cast<int>(p.n), K);
        QSeries ys(K);
        for (const auto& [e, v] : p.coeffs)
            if (e <= K) ys.c[static_cast<size_t>(e)] = v;
        QSeries val = series_eval(h, xs, ys);
        int o = val.ord();
        if (o >= 0) return o;
        if (K == cap) break;
        K = std::min(2 * K, cap);
    }
    if (p.exact) {
        // Polynomial parametrization: extend the working precision freely.
        int K2 = 4 * cap + 64;
        QSeries xs = QSeries::monomial(Q(1), static_cast<int>(p.n), K2);
        QSeries ys(K2);
        for (const auto& [e, v] : p.coeffs) ys.c[static_cast<size_t>(e)] = v;
        QSeries val = series_eval(h, xs, ys);
        int o = val.ord();
        if (o >= 0) return o;
    }
    throw oracle_error("insufficient precision: ord_along unresolved within truncation");
}

CharData char_exponents(const PuiseuxParam& p) {
    long e = p.n;
    std::vector<long> b;
    for (const auto& [i, c] : p.coeffs) {
        if (e == 1) break;
        if (i % e != 0) {
            b.push_back(i);
            e = std::gcd(e, static_cast<long>(i));
        }
    }
    if (e != 1) {
        if (p.exact)
            throw domain_error("char_exponents: parametrization is not primitive");
        throw oracle_error("insufficient precision: gcd chain not closed within truncation");
    }
    return make_char_data(p.n, b);
}

BiPoly implicitize(const PuiseuxParam& p) {
    if (!p.exact) throw domain_error("implicitize: needs a t-polynomial parametrization");
    long n = p.n;
    {
        long g = n;
        for (const auto& [e, v] : p.coeffs) g = std::gcd(g, static_cast<long>(e));
        if (g != 1 && !(n == 1 && p.coeffs.empty()))
            throw domain_error("implicitize: parametrization is not primitive");
    }
    // Multiplication matrix of y(t) on Q[x][t] / (t^n - x).
    std::vector<std::vector<BiPoly>> M(static_cast<size_t>(n), std::vector<BiPoly>(static_cast<size_t>(n)));
    for (long j = 0; j < n; ++j)
        for (const auto& [e, v] : p.coeffs) {
            long tot = e + j;
            long a = tot / n, r = tot % n;
            M[static_cast<size_t>(r)][static_cast<size_t>(j)] +=
                bp_term(v, static_cast<int>(a), 0);
        }
    // det(y I - M) via fraction-free elimination.
    std::vector<std::vector<BiPoly>> A(static_cast<size_t>(n), std::vector<BiPoly>(static_cast<size_t>(n)));
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c) {
            A[r][c] = BiPoly() - M[r][c];
            if (r == c) A[r][c] += bp_y(1);
        }
    BiPoly prev = bp_const(Q(1));
    int sign = 1;
    size_t size = static_cast<size_t>(n);
    for (size_t k = 0; k + 1 < size; ++k) {
        if (A[k][k].is_zero()) {
            size_t pr = k;
            for (size_t r = k + 1; r < size; ++r)
                if (!A[r][k].is_zero()) {
                    pr = r;
                    break;
                }
            if (pr == k) return BiPoly();  // cannot happen for char polynomials
            std::swap(A[k], A[pr]);
            sign = -sign;
        }
        for (size_t r = k + 1; r < size; ++r) {
            for (size_t c = k + 1; c < size; ++c)
                A[r][c] = exact_div(A[k][k] * A[r][c] - A[r][k] * A[k][c], prev);
            A[r][k] = BiPoly();
        }
        prev = A[k][k];
    }
    BiPoly det = A[size - 1][size - 1];
    return sign < 0 ? BiPoly() - det : det;
}

bool is_irreducible_oracle(const BiPoly& f) {
    if (!is_monic_in_y(f)) throw domain_error("is_irreducible_oracle: f must be monic in y");
    if (resultant_y(f, partial_y(f)).is_zero()) throw domain_error("not square-free");
    auto params = newton_puiseux(f, default_trunc(f));
    return params.size() == 1 && params[0].n == deg_y(f);
}

BranchAnalysis analyze_branches(const BiPoly& f) {
    int T = default_trunc(f);
    for (int attempt = 0; attempt < 2; ++attempt) {
        try {
            BranchAnalysis ba;
            ba.params = newton_puiseux(f, T);
            for (const auto& p : ba.params) ba.chars.push_back(char_exponents(p));
            return ba;
        } catch (const oracle_error& e) {
            std::string msg = e.what();
            if (attempt == 0 && msg.find("insufficient precision") != std::string::npos) {
                T *= 2;
                continue;
            }
            throw;
        }
    }
    throw oracle_error("insufficient precision: truncation policy exhausted");
}

}  // namespace branchforge
