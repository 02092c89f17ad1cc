#ifndef BRANCHFORGE_SEMIGROUP_HPP
#define BRANCHFORGE_SEMIGROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "branchforge/rational.hpp"

namespace branchforge {

/// Characteristic data of a plane branch with respect to x = 0:
/// multiplicity n = e_0, characteristic exponents b_1 < ... < b_g, gcd chain
/// e_j = gcd(e_{j-1}, b_j), characteristic integers n_j = e_{j-1}/e_j and the
/// coprime companions m_j (m_1 = b_1/e_1, m_j e_j = b_j - b_{j-1} for j >= 2).
struct CharData {
    long n = 1;
    std::vector<long> b;
    std::vector<long> e;     // e_0 .. e_g
    std::vector<long> nseq;  // n_1 .. n_g
    std::vector<long> mseq;  // m_1 .. m_g

    int g() const { return static_cast<int>(b.size()); }
};

/// Semigroup generators b̄_0, b̄_1, ..., b̄_g. The sentinel b̄_{g+1} = infinity
/// is kept out of the vector; callers use gen_above() which returns absent at
/// the top index.
struct SemigroupData {
    std::vector<long> gens;

    int g() const { return static_cast<int>(gens.size()) - 1; }
    std::optional<long> gen_above(int j) const {
        if (j + 1 < static_cast<int>(gens.size())) return gens[j + 1];
        return std::nullopt;  // b̄_{g+1} = infinity
    }
    std::vector<long> e_chain() const;  // e_j = gcd(b̄_0, ..., b̄_j)
    std::vector<long> n_chain() const;  // n_j = e_{j-1}/e_j
};

struct TeeExpansion {
    std::vector<long> eta;  // eta_0 >= 0, 0 <= eta_j < n_j
};

/// Builds CharData from (n, b) and derives e, nseq, mseq.
/// Throws domain_error when the gcd chain does not strictly decrease to 1.
CharData make_char_data(long n, std::vector<long> b);

SemigroupData generators_from_char(const CharData& c);
CharData char_from_generators(const SemigroupData& s);

/// Unique bounded expansion v = eta_0 b̄_0 + ... + eta_g b̄_g with
/// 0 <= eta_j < n_j for j >= 1; absent when v is not in the semigroup.
/// Works for any prefix of a valid generator list (scaled internally).
std::optional<TeeExpansion> tee_expand(long v, const std::vector<long>& gens);
inline std::optional<TeeExpansion> tee_expand(long v, const SemigroupData& s) {
    return tee_expand(v, s.gens);
}

struct SemigroupCheck {
    bool ok = false;
    std::string witness;  // first violated condition when not ok
};

/// Checks the plane-branch semigroup conditions: strictly increasing minimal
/// generators, gcd chain strictly decreasing to 1, n_j b̄_j representable over
/// the previous generators and n_j b̄_j < b̄_{j+1}.
SemigroupCheck validate_plane_semigroup(const SemigroupData& s);

struct MonomialCurveEquation {
    int j = 0;                 // 1-based level: v_j^{n_j} - v^eta
    long nj = 0;
    std::vector<long> eta;     // eta_0 .. eta_{j-1}
};

std::vector<MonomialCurveEquation> monomial_curve_equations(const SemigroupData& s);

/// Conductor of the semigroup (equals the Milnor number for a branch).
long conductor(const SemigroupData& s);

}  // namespace branchforge

#endif
