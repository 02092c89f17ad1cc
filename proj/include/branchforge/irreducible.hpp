#ifndef BRANCHFORGE_IRREDUCIBLE_HPP
#define BRANCHFORGE_IRREDUCIBLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "branchforge/approot.hpp"
#include "branchforge/semigroup.hpp"
#include "branchforge/toric.hpp"

namespace branchforge {

/// Running data of the criterion: B̄_0..B̄_j, E_0..E_j, N_1..N_j and the
/// approximate roots F_1..F_{j+1} (monic of degrees 1, N_1, N_1 N_2, ...).
struct CriterionState {
    std::vector<long> Bbar;
    std::vector<long> E;
    std::vector<long> N;
    std::vector<BiPoly> roots;
};

/// Generalized Newton polygon: the (formal multiplicity, weight) points of a
/// Q-adic expansion and their hull. Coordinates are integers after the 1/E_j
/// scaling (E_j divides every B̄_l with l <= j).
struct GenNewtonPolygon {
    std::vector<LatticePoint> points;
    std::vector<LatticePoint> vertices;
};

struct IrreducibilityWitness {
    std::string kind;  // "E-stagnation" | "Bbar-ordering" | "straight-line" | "formal-tie"
    int level = 0;
    std::string detail;
};

struct IrreducibilityReport {
    enum class Verdict { Yes, No, Error };
    Verdict verdict = Verdict::Error;
    std::optional<SemigroupData> semigroup;        // populated on Yes
    std::optional<IrreducibilityWitness> witness;  // populated on No
    std::string error;                             // populated on Error
    CriterionState state;
    std::vector<GenNewtonPolygon> polygons;  // one per level
};

struct FormalValue {
    bool absent = false;  // no admissible term
    bool tie = false;     // minimum attained more than once
    long value = 0;       // scaled by 1/E
};

/// The minimum of a formal intersection was attained twice; for the criterion
/// this is a structural failure reported as a NO verdict.
struct formal_tie_error : domain_error {
    explicit formal_tie_error(const std::string& what) : domain_error(what) {}
};

/// Formal intersection multiplicity of P with the root sequence, using the
/// weights Bbar (Bbar[0] weights ord_x). When Bbar covers one entry fewer
/// than roots, terms involving the top root are inadmissible.
FormalValue formal_intersection(const BiPoly& P, const std::vector<BiPoly>& roots,
                                const std::vector<long>& Bbar, long scale_divisor);

/// Generalized Newton polygon of P with respect to Q (deg Q | deg P).
/// Throws domain_error on a formal tie (structural assumption violated).
GenNewtonPolygon gen_newton_polygon(const BiPoly& P, const BiPoly& Q,
                                    const std::vector<BiPoly>& roots,
                                    const std::vector<long>& Bbar, long scale_divisor);

/// Exactly one compact edge with vertices (V, 0) and (0, V), V = N_j B̄_j / E_j.
bool straight_line_check(const GenNewtonPolygon& G, long Nj, long Bj, long Ej);

/// Tschirnhausen preparation: checks monic Weierstrass form and removes the
/// y^{N-1} coefficient.
BiPoly prepare(const BiPoly& F);

IrreducibilityReport abhyankar_irreducible(const BiPoly& F);

/// Bookkeeping of the straight-line expansion at one level of an irreducible
/// branch: every non-leading term mapped through the correspondence inverse.
struct StraightTerm {
    std::vector<long> word;  // i_0 .. i_j
    long r = 0, s = 0;
    long value = 0;  // (term, f)_0
};
struct StraightReport {
    std::vector<StraightTerm> terms;
    long leading_value = 0;        // (f_j^{e_{j-1}}, f)_0 = e_{j-1} b̄_j
    long balanced_r = 0;           // b̄_j - n_{j-1} b̄_{j-1}
    bool balanced_present = false; // M_j(balanced_r, 0) occurs in the expansion
    std::vector<size_t> minimal;   // indices of minimal-value terms
};
StraightReport straight_expansion_analysis(const BiPoly& f, int j, const ResolutionLedger& L,
                                           const std::vector<BiPoly>& roots);

}  // namespace branchforge

#endif
