#ifndef BRANCHFORGE_DEFORM_HPP
#define BRANCHFORGE_DEFORM_HPP

#include <map>
#include <string>
#include <vector>

#include "branchforge/semigroup.hpp"
#include "branchforge/toric.hpp"

namespace branchforge {

/// Coefficient tables of a multi-semi-quasi-homogeneous deformation: per level
/// j a finite map (r, s) -> A^{(j)}_{r,s} supported in the open region below
/// the compact edge of Delta_j, with A^{(j)}_{0,0} != 0.
struct MsqhSpec {
    std::map<int, std::map<std::pair<long, long>, Q>> tables;  // level j -> A^{(j)}
};

struct MsqhTerm {
    int level = 0;
    long r = 0, s = 0;
    Q coeff;         // A^{(j)}_{r,s}
    long omega = 0;  // t_j-weight
    BiPoly monomial; // expanded M_j(r, s)
};

/// The deformed polynomial P_{t_1} = f + sum of A t_j^{omega} M_j(r, s).
struct MsqhPoly {
    BiPoly base;
    int g = 0;
    std::vector<MsqhTerm> terms;
};

struct GenericityLevel {
    int j = 0;
    std::vector<Q> q;  // coefficients of Q_j(v, 1), degree e_j
    bool distinct_roots = true;
};

struct GenericityReport {
    std::vector<GenericityLevel> levels;  // j = 1 .. g-1
    bool generic = true;
};

/// omega_j(r, s) = e_j (e_j n_j m_j - r n_j - s m_j); positive below the edge,
/// zero on it. Throws when (r, s) lies outside Delta_j.
long omega_weight(int j, long r, long s, const CharData& c);

/// Validates the tables (supports inside Delta_j minus the edge, A_{0,0} != 0)
/// and assembles the deformation with each M_j(r, s) expanded through the
/// monomial correspondence (level 1 uses plain monomials x^r y^s).
MsqhPoly build_msqh(const BiPoly& f, const CharData& c, const std::vector<BiPoly>& roots,
                    const MsqhSpec& spec);

/// Specialize the parameters to rational values (t = 0 recovers f).
BiPoly specialize(const MsqhPoly& P, const std::vector<Q>& tvals);

std::string to_string(const MsqhPoly& P);

/// Square-freeness of the edge polynomials Q_j built from the A^{(j+1)}_{0,s}
/// columns, for j = 1 .. g-1.
GenericityReport genericity_check(const MsqhSpec& spec, const CharData& c);

/// Pure-arithmetic identity: sum over levels of the Kouchnirenko value of the
/// level polygon plus (e_j - 1) equals the semigroup Milnor number.
bool prop_milnor_identity(const CharData& c);

}  // namespace branchforge

#endif
