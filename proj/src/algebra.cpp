#include "branchforge/algebra.hpp"

#include <sstream>

namespace branchforge {

// --- printing -----------------------------------------------------------------

namespace {

void append_power(std::ostream& os, const char* var, int e, bool& first_factor) {
    if (e == 0) return;
    if (!first_factor) os << "*";
    first_factor = false;
    os << var;
    if (e != 1) os << "^" << e;
}

template <class Term>
void append_term(std::ostream& os, bool first, const Q& c, const Term& powers) {
    Q a = c;
    if (sgn(a) < 0) {
        os << (first ? "-" : " - ");
        a = -a;
    } else if (!first) {
        os << " + ";
    }
    bool first_factor = true;
    std::ostringstream body;
    bool has_var = false;
    for (const auto& [var, e] : powers)
        if (e != 0) has_var = true;
    if (a != 1 || !has_var) {
        os << q_str(a);
        first_factor = false;
    }
    for (const auto& [var, e] : powers) {
        bool ff = first_factor;
        append_power(os, var, e, ff);
        first_factor = ff;
    }
}

}  // namespace

std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    // Descending in (y, x): highest y-power first.
    std::vector<std::pair<Mono2, Q>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        return std::pair(a.first.j, a.first.i) > std::pair(b.first.j, b.first.i);
    });
    bool first = true;
    for (const auto& [m, c] : ts) {
        append_term(os, first, c,
                    std::vector<std::pair<const char*, int>>{{"x", m.i}, {"y", m.j}});
        first = false;
    }
    return os.str();
}

std::string to_string(const FamPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    std::vector<std::pair<Mono3, Q>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        return std::tuple(a.first.j, a.first.i, a.first.k) >
               std::tuple(b.first.j, b.first.i, b.first.k);
    });
    bool first = true;
    for (const auto& [m, c] : ts) {
        append_term(os, first, c,
                    std::vector<std::pair<const char*, int>>{
                        {"l", m.k}, {"x", m.i}, {"y", m.j}});
        first = false;
    }
    return os.str();
}

// --- predicates ----------------------------------------------------------------

bool is_monic_in_y(const BiPoly& p) {
    int n = deg_y(p);
    if (n < 0) return false;
    BiPoly lead;
    for (const auto& [m, c] : p.terms())
        if (m.j == n) lead.add_term({m.i, 0}, c);
    return lead == BiPoly::constant(Q(1));
}

bool is_weierstrass(const BiPoly& p) {
    if (!is_monic_in_y(p)) return false;
    int n = deg_y(p);
    for (const auto& [m, c] : p.terms())
        if (m.i == 0 && m.j < n) return false;  // f(0, y) must be y^N
    return true;
}

// --- integer fast path ------------------------------------------------------------

ZPolyX exact_div(const ZPolyX& a, const ZPolyX& b) {
    if (b.is_zero()) throw domain_error("exact_div: division by zero");
    ZPolyX rem = a, quot;
    if (!rem.is_zero() && rem.c.size() >= b.c.size())
        quot.c.assign(rem.c.size() - b.c.size() + 1, Z(0));
    while (!rem.is_zero() && rem.c.size() >= b.c.size()) {
        size_t k = rem.c.size() - b.c.size();
        Z q;
        mpz_divexact(q.get_mpz_t(), rem.c.back().get_mpz_t(), b.c.back().get_mpz_t());
        if (sgn(q) == 0) throw domain_error("exact_div: not exact");
        quot.c[k] = q;
        for (size_t t = 0; t < b.c.size(); ++t) rem.c[k + t] -= q * b.c[t];
        if (sgn(rem.c.back()) != 0) throw domain_error("exact_div: not exact");
        rem.trim();
    }
    if (!rem.is_zero()) throw domain_error("exact_div: not exact");
    quot.trim();
    return quot;
}

namespace {

// BiPoly -> content * primitive integer form, as y-coefficients over Z[x].
struct ZForm {
    Q content;
    UPoly<ZPolyX> poly;
};

ZForm z_form(const BiPoly& A) {
    Z den(1);
    for (const auto& [m, c] : A.terms()) {
        Z d = c.get_den();
        den = den / z_gcd(den, d) * d;
    }
    Z num(0);
    for (const auto& [m, c] : A.terms()) num = z_gcd(num, c.get_num() * (den / c.get_den()));
    if (sgn(num) == 0) num = 1;
    ZForm f;
    f.content = Q(num, den);
    f.content.canonicalize();
    f.poly.c.resize(static_cast<size_t>(std::max(0, deg_y(A) + 1)));
    for (const auto& [m, c] : A.terms()) {
        Z v = c.get_num() * (den / c.get_den());
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), num.get_mpz_t());
        auto& coeff = f.poly.c[static_cast<size_t>(m.j)];
        if (coeff.c.size() < static_cast<size_t>(m.i) + 1) coeff.c.resize(static_cast<size_t>(m.i) + 1);
        coeff.c[static_cast<size_t>(m.i)] = v;
    }
    f.poly.trim();
    return f;
}

BiPoly from_zpoly(const ZPolyX& p, const Q& scale) {
    BiPoly r;
    for (size_t i = 0; i < p.c.size(); ++i)
        if (sgn(p.c[i]) != 0) r.add_term({static_cast<int>(i), 0}, scale * Q(p.c[i]));
    return r;
}

Q q_pow_int(const Q& base, int e) {
    Q r(1);
    for (int t = 0; t < e; ++t) r *= base;
    return r;
}

}  // namespace

// --- division / resultants ------------------------------------------------------

std::pair<BiPoly, BiPoly> euclid_div_y(const BiPoly& A, const BiPoly& B) {
    if (!is_monic_in_y(B) || deg_y(B) < 1)
        throw domain_error("euclid_div_y: divisor must be monic in y of positive degree");
    auto [q, r] = divmod_monic(ycoeffs(A), ycoeffs(B));
    return {from_ycoeffs(q), from_ycoeffs(r)};
}

BiPoly resultant_y(const BiPoly& A, const BiPoly& B) {
    if (A.is_zero() && B.is_zero()) throw domain_error("resultant_y: both inputs zero");
    if (A.is_zero() || B.is_zero()) return BiPoly();
    // Run the subresultant chain over Z[x] on the primitive parts and restore
    // the content factor: Res(cA A0, cB B0) = cA^{deg B} cB^{deg A} Res(A0, B0).
    ZForm a = z_form(A), b = z_form(B);
    ZPolyX res = resultant(a.poly, b.poly);
    Q scale = q_pow_int(a.content, b.poly.deg() < 0 ? 0 : b.poly.deg()) *
              q_pow_int(b.content, a.poly.deg() < 0 ? 0 : a.poly.deg());
    return from_zpoly(res, scale);
}

int intersection_mult(const BiPoly& f, const BiPoly& h) {
    if (h.is_zero()) throw domain_error("intersection_mult: second argument is zero");
    BiPoly r = resultant_y(f, h);
    if (r.is_zero()) throw domain_error("non-coprime");
    return ord_x(r);
}

BiPoly partial_y(const BiPoly& p) {
    BiPoly r;
    for (const auto& [m, c] : p.terms())
        if (m.j > 0) r.add_term({m.i, m.j - 1}, Q(m.j) * c);
    return r;
}

BiPoly partial_x(const BiPoly& p) {
    BiPoly r;
    for (const auto& [m, c] : p.terms())
        if (m.i > 0) r.add_term({m.i - 1, m.j}, Q(m.i) * c);
    return r;
}

FamPoly partial_y(const FamPoly& p) {
    FamPoly r;
    for (const auto& [m, c] : p.terms())
        if (m.j > 0) r.add_term({m.k, m.i, m.j - 1}, Q(m.j) * c);
    return r;
}

BiPoly eval_lambda0(const FamPoly& F) {
    BiPoly r;
    for (const auto& [m, c] : F.terms())
        if (m.k == 0) r.add_term({m.i, m.j}, c);
    return r;
}

BiPoly eval_lambda(const FamPoly& F, const Q& value) {
    BiPoly r;
    for (const auto& [m, c] : F.terms()) {
        Q v = c;
        for (int t = 0; t < m.k; ++t) v *= value;
        r.add_term({m.i, m.j}, v);
    }
    return r;
}

BiPoly substitute(const BiPoly& A, const BiPoly& xexpr, const BiPoly& yexpr) {
    // Double Horner: first in y, then each x-only coefficient in x.
    auto eval_x = [&](const BiPoly& xonly) {
        BiPoly r;
        int dx = deg_x(xonly);
        for (int i = dx; i >= 0; --i) {
            r = r * xexpr;
            r.add_term({0, 0}, xonly.coeff({i, 0}));
        }
        return r;
    };
    UPoly<BiPoly> yc = ycoeffs(A);
    BiPoly r;
    for (int j = yc.deg(); j >= 0; --j) {
        r = r * yexpr;
        if (j <= yc.deg()) r += eval_x(yc.c[j]);
    }
    return r;
}

FamPoly lift_fam(const BiPoly& p) {
    FamPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term({0, m.i, m.j}, c);
    return r;
}

// --- Bareiss determinant of the Sylvester matrix (test oracle) ------------------

BiPoly resultant_y_sylvester(const BiPoly& A, const BiPoly& B) {
    UPoly<BiPoly> a = ycoeffs(A), b = ycoeffs(B);
    if (a.is_zero() || b.is_zero()) return BiPoly();
    int m = a.deg(), n = b.deg();
    if (m == 0 && n == 0) return BiPoly::constant(Q(1));
    int size = m + n;
    std::vector<std::vector<BiPoly>> M(size, std::vector<BiPoly>(size));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + (m - k)] = a.c[k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + (n - k)] = b.c[k];
    // Fraction-free Gaussian elimination with row-swap sign tracking.
    BiPoly prev = BiPoly::constant(Q(1));
    int sign = 1;
    for (int k = 0; k < size - 1; ++k) {
        if (M[k][k].is_zero()) {
            int p = -1;
            for (int r = k + 1; r < size; ++r)
                if (!M[r][k].is_zero()) {
                    p = r;
                    break;
                }
            if (p < 0) return BiPoly();  // singular
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (int r = k + 1; r < size; ++r) {
            for (int c = k + 1; c < size; ++c)
                M[r][c] = exact_div(M[k][k] * M[r][c] - M[r][k] * M[k][c], prev);
            M[r][k] = BiPoly();
        }
        prev = M[k][k];
    }
    BiPoly det = M[size - 1][size - 1];
    return sign < 0 ? BiPoly() - det : det;
}

}  // namespace branchforge
