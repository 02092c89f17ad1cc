#include "branchforge/approot.hpp"

#include <numeric>

namespace branchforge {

std::vector<BiPoly> h_adic(const BiPoly& F, const BiPoly& H) {
    auto u = h_adic_u(ycoeffs(F), ycoeffs(H));
    std::vector<BiPoly> out;
    out.reserve(u.size());
    for (const auto& a : u) out.push_back(from_ycoeffs(a));
    return out;
}

BiPoly tschirnhausen(const BiPoly& F, const BiPoly& H) {
    return from_ycoeffs(tschirnhausen_u(ycoeffs(F), ycoeffs(H)));
}

BiPoly approximate_root(const BiPoly& F, int m) {
    return from_ycoeffs(approximate_root_u(ycoeffs(F), m));
}

std::vector<FamPoly> h_adic(const FamPoly& F, const FamPoly& H) {
    auto u = h_adic_u(ycoeffs(F), ycoeffs(H));
    std::vector<FamPoly> out;
    out.reserve(u.size());
    for (const auto& a : u) out.push_back(from_ycoeffs(a));
    return out;
}

FamPoly tschirnhausen(const FamPoly& F, const FamPoly& H) {
    return from_ycoeffs(tschirnhausen_u(ycoeffs(F), ycoeffs(H)));
}

FamPoly approximate_root(const FamPoly& F, int m) {
    return from_ycoeffs(approximate_root_u(ycoeffs(F), m));
}

namespace {

template <class R>
void multi_adic_rec(const UPoly<R>& F, const std::vector<UPoly<R>>& roots, size_t level,
                    std::vector<int>& index, std::map<std::vector<int>, R>& out) {
    if (level == 0) {
        if (F.deg() > 0) throw domain_error("multi_adic: residual degree");
        if (!F.is_zero()) {
            auto [it, fresh] = out.emplace(index, F.c[0]);
            if (!fresh) throw domain_error("multi_adic: duplicate index");
        }
        return;
    }
    const UPoly<R>& H = roots[level - 1];
    auto a = h_adic_u(F, H);
    int s = static_cast<int>(a.size()) - 1;
    for (int pow = 0; pow <= s; ++pow) {
        const UPoly<R>& coeff = a[static_cast<size_t>(s - pow)];
        if (coeff.is_zero()) continue;
        index[level - 1] = pow;
        multi_adic_rec(coeff, roots, level - 1, index, out);
    }
    index[level - 1] = 0;
}

template <class P>
MultiAdicExpansion<P> multi_adic_impl(const P& F, const std::vector<P>& roots) {
    if (roots.empty()) throw domain_error("multi_adic: empty root system");
    using U = decltype(ycoeffs(F));
    std::vector<U> rs;
    for (const auto& r : roots) rs.push_back(ycoeffs(r));
    int prev = 0;
    for (const auto& r : rs) {
        if (r.deg() < 1 || !(r.lead() == ring_one<P>()))
            throw domain_error("multi_adic: roots must be monic of positive degree");
        if (prev > 0 && (r.deg() % prev != 0 || r.deg() / prev < 2))
            throw domain_error("multi_adic: root degrees must multiply by integers >= 2");
        prev = r.deg();
    }
    if (rs.front().deg() != 1) throw domain_error("multi_adic: first root must have degree 1");
    MultiAdicExpansion<P> e;
    std::vector<int> index(roots.size(), 0);
    multi_adic_rec(ycoeffs(F), rs, roots.size(), index, e.terms);
    // Bound check for the non-top indices.
    for (const auto& [I, c] : e.terms) {
        for (size_t l = 0; l + 1 < I.size(); ++l) {
            int bound = rs[l + 1].deg() / rs[l].deg();
            if (I[l] < 0 || I[l] >= bound) throw domain_error("multi_adic: index out of bounds");
        }
    }
    return e;
}

}  // namespace

MultiAdicExpansion<BiPoly> multi_adic(const BiPoly& F, const std::vector<BiPoly>& roots) {
    return multi_adic_impl(F, roots);
}

MultiAdicExpansion<FamPoly> multi_adic(const FamPoly& F, const std::vector<FamPoly>& roots) {
    return multi_adic_impl(F, roots);
}

BiPoly multi_adic_reconstruct(const MultiAdicExpansion<BiPoly>& e,
                              const std::vector<BiPoly>& roots) {
    BiPoly acc;
    for (const auto& [I, c] : e.terms) {
        BiPoly term = c;
        for (size_t l = 0; l < I.size(); ++l)
            if (I[l] > 0) term *= roots[l].pow(I[l]);
        acc += term;
    }
    return acc;
}

bool semiroot_check(const BiPoly& f, const BiPoly& h, int j, const std::vector<long>& gens) {
    if (j < 0 || j >= static_cast<int>(gens.size())) throw domain_error("semiroot_check: bad level");
    std::vector<long> e;
    long acc = 0;
    for (long v : gens) {
        acc = std::gcd(acc, v);
        e.push_back(acc);
    }
    // deg f_j = n_0 ... n_{j-1} = e_0 / e_{j-1}; a 0-semi-root is a smooth curve.
    long expected_deg = (j == 0) ? 1 : gens[0] / e[static_cast<size_t>(j) - 1];
    return intersection_mult(f, h) == gens[static_cast<size_t>(j)] &&
           deg_y(h) == static_cast<int>(expected_deg);
}

}  // namespace branchforge
