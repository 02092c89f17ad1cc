#ifndef BRANCHFORGE_TORIC_HPP
#define BRANCHFORGE_TORIC_HPP

#include <optional>
#include <vector>

#include "branchforge/algebra.hpp"
#include "branchforge/newton.hpp"
#include "branchforge/semigroup.hpp"

namespace branchforge {

/// Chart data at one level of the toric resolution: coprime (n_j, m_j) and the
/// unique (c_j, d_j) with c_j m_j - d_j n_j = 1, 1 <= c_j <= n_j.
struct LevelData {
    int j = 1;
    long n = 1, m = 1;
    long c = 1, d = 0;
    std::optional<Q> theta;  // edge constant when extracted from a polynomial
};

struct ResolutionLedger {
    std::vector<LevelData> levels;  // levels[0] is j = 1
    SemigroupData gens;
    std::vector<long> e;  // e_0 .. e_g

    int g() const { return static_cast<int>(levels.size()); }
};

/// Exponent word of the monomial M_j(r, s) = x^{i_0} f_1^{i_1} ... f_j^{i_j}.
struct MonomialWord {
    int j = 1;
    long r = 0, s = 0;
    std::vector<long> i;  // i_0 .. i_j
    std::vector<long> k;  // k_2 .. k_j (empty for j = 1)
};

struct StrictTransform {
    long exc_u = 0;   // exponent of u in the exceptional monomial
    long exc_x2 = 0;  // exponent of x2
    BiPoly body;      // x-slot = x2, y-slot = u; not divisible by u or x2
};

/// One resolved level of the strict-transform chain.
struct ChainLevel {
    LevelData level;           // chart used, with theta filled in
    StrictTransform transform;
    BiPoly translated;         // body at o_{j+1} in (x2, v), v = u - theta^{-1}
};

std::pair<long, long> chart_pair(long n, long m);

ResolutionLedger ledger_from_char(const CharData& c);

/// Chart-exponent triple solving (y^{l n} o pi) u^k x2^r = x^{i0} y^{i1} o pi.
struct DosTriple {
    long k = 0, i0 = 0, i1 = 0;
};
DosTriple lemma_dos(long r, long l, const LevelData& lvl);

MonomialWord monomial_correspondence(int j, long r, long s, const ResolutionLedger& L);

/// Inverse of the correspondence: recovers (r, s) from an exponent word.
/// Throws domain_error when the word is not a valid M_j image.
std::pair<long, long> invert_correspondence(int j, const std::vector<long>& i,
                                            const ResolutionLedger& L);

/// (M_j(r, s), f)_0 = e_{j-2} b̄_{j-1} + r e_{j-1} + s (b̄_j - n_{j-1} b̄_{j-1});
/// for j = 1 the monomial is x^r y^s and the value is r b̄_0 + s b̄_1.
long monomial_intersection(int j, long r, long s, const SemigroupData& S);

/// Concrete product x^{i_0} roots[0]^{i_1} ... roots[j-1]^{i_j}.
BiPoly monomial_concrete(const MonomialWord& w, const std::vector<BiPoly>& roots);

/// A(u^c x2^n, u^d x2^m) = u^a x2^b * body.
StrictTransform toric_pullback(const BiPoly& A, const LevelData& lvl);

/// Iterated pullback/translate along the ledger charts. At each level checks
/// body(0, u) = (1 - theta u)^{e_j} and that the symbolic restriction to the
/// single compact edge is the matching perfect power.
std::vector<ChainLevel> strict_transform_chain(const BiPoly& f, const ResolutionLedger& L);

}  // namespace branchforge

#endif
