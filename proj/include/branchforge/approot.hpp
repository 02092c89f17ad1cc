#ifndef BRANCHFORGE_APPROOT_HPP
#define BRANCHFORGE_APPROOT_HPP

#include <map>
#include <vector>

#include "branchforge/algebra.hpp"

namespace branchforge {

// --- H-adic expansions and the Tschirnhausen operator -------------------------
//
// Everything here is generic over the coefficient ring so the same code serves
// Q[x][y] and Q[lambda][x][y]; the public wrappers below fix the sparse types.

/// H-adic expansion F = a_0 H^s + a_1 H^{s-1} + ... + a_s with deg a_i < deg H
/// and s = [deg F / deg H]. Returns (a_0, ..., a_s).
template <class R>
std::vector<UPoly<R>> h_adic_u(const UPoly<R>& F, const UPoly<R>& H) {
    if (H.is_zero() || H.deg() < 1 || !(H.lead() == ring_one<R>()))
        throw domain_error("h_adic: H must be monic of positive degree");
    int s = F.is_zero() ? 0 : F.deg() / H.deg();
    std::vector<UPoly<R>> out(static_cast<size_t>(s) + 1);
    UPoly<R> cur = F;
    for (int k = s; k >= 1; --k) {
        auto [q, r] = divmod_monic(cur, H);
        out[static_cast<size_t>(k)] = r;
        cur = q;
    }
    out[0] = cur;  // degree < deg H after s divisions
    return out;
}

/// Tschirnhausen operator tau_F(H) = H + a_1/k for k = deg F / deg H.
template <class R>
UPoly<R> tschirnhausen_u(const UPoly<R>& F, const UPoly<R>& H) {
    int N = F.deg(), m = H.deg();
    if (m <= 0 || N < 0 || N % m != 0) throw domain_error("tschirnhausen: degree mismatch");
    int k = N / m;
    auto a = h_adic_u(F, H);
    UPoly<R> shift = a[1];
    Q inv = q_of(1, k);
    for (auto& c : shift.c) c = inv * c;
    return H + shift;
}

/// The unique monic G of degree m with deg(F - G^{N/m}) < N - m; computed by
/// iterating tau_F (at most m times, then certified by the defining
/// inequality).
template <class R>
UPoly<R> approximate_root_u(const UPoly<R>& F, int m) {
    int N = F.deg();
    if (N < 1 || m < 1 || N % m != 0 || !(F.lead() == ring_one<R>()))
        throw domain_error("approximate_root: need monic F with m | deg F");
    if (m == N) return F;
    UPoly<R> H;
    H.c.resize(static_cast<size_t>(m) + 1);
    H.c[static_cast<size_t>(m)] = ring_one<R>();
    for (int it = 0; it < m; ++it) {
        UPoly<R> next = tschirnhausen_u(F, H);
        bool fixed = (next - H).is_zero();
        H = next;
        if (fixed) break;
    }
    UPoly<R> diff = F - upoly_pow(H, N / m);
    if (!diff.is_zero() && diff.deg() >= N - m)
        throw domain_error("approximate_root: defining inequality failed");
    return H;
}

// --- sparse-type wrappers ------------------------------------------------------

std::vector<BiPoly> h_adic(const BiPoly& F, const BiPoly& H);
BiPoly tschirnhausen(const BiPoly& F, const BiPoly& H);
BiPoly approximate_root(const BiPoly& F, int m);

std::vector<FamPoly> h_adic(const FamPoly& F, const FamPoly& H);
FamPoly tschirnhausen(const FamPoly& F, const FamPoly& H);
FamPoly approximate_root(const FamPoly& F, int m);

// --- multi-adic expansions ------------------------------------------------------

/// A system of monic polynomials of degrees 1, N_1, N_1 N_2, ...; the last
/// entry plays the unbounded role in expansions.
struct RootSystem {
    std::vector<BiPoly> roots;
};

/// Expansion F = sum_I alpha_I(x) * roots[0]^{i_1} * ... * roots[h-1]^{i_h}
/// with 0 <= i_l < deg(roots[l]) / deg(roots[l-1]) for l < h and the top index
/// unbounded. Keys are the index vectors I = (i_1, ..., i_h).
template <class P>
struct MultiAdicExpansion {
    std::map<std::vector<int>, P> terms;  // coefficients are main-variable-free
};

MultiAdicExpansion<BiPoly> multi_adic(const BiPoly& F, const std::vector<BiPoly>& roots);
MultiAdicExpansion<FamPoly> multi_adic(const FamPoly& F, const std::vector<FamPoly>& roots);

inline MultiAdicExpansion<BiPoly> multi_adic(const BiPoly& F, const RootSystem& rs) {
    return multi_adic(F, rs.roots);
}

/// Rebuild a polynomial from its multi-adic expansion (test support).
BiPoly multi_adic_reconstruct(const MultiAdicExpansion<BiPoly>& e,
                              const std::vector<BiPoly>& roots);

/// Semi-root test: (f, h)_0 = b̄_j and deg_y h = n_0 ... n_{j-1}.
bool semiroot_check(const BiPoly& f, const BiPoly& h, int j, const std::vector<long>& gens);

}  // namespace branchforge

#endif
