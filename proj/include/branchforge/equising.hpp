#ifndef BRANCHFORGE_EQUISING_HPP
#define BRANCHFORGE_EQUISING_HPP

#include <optional>
#include <string>
#include <vector>

#include "branchforge/approot.hpp"
#include "branchforge/newton.hpp"
#include "branchforge/semigroup.hpp"
#include "branchforge/toric.hpp"

namespace branchforge {

struct EquisingularityWitness {
    std::string kind;  // "equimultiplicity" | "tangent-cone" | "edge-weight" |
                       // "theta-vanishes" | "gcd-stagnation" | "gcd-condition" |
                       // "ordering" | "expansion-term" | "jacobian-polygon"
    int level = 0;
    long r = 0, s = 0;  // offending term when applicable
    std::string detail;
};

struct EquisingularityLevel {
    int j = 0;
    long N = 0, M = 0;  // characteristic integer and edge companion at this level
    Q theta0;           // theta_{j+1}(0)
};

struct EquisingularityReport {
    enum class Verdict { Yes, No, Error };
    Verdict verdict = Verdict::Error;
    std::string method;  // "cri1" | "cri2" | "equi-the"
    std::vector<EquisingularityLevel> trace;
    std::optional<EquisingularityWitness> witness;
    std::string error;
};

/// Normal form: monic of degree N in y, zero y^{N-1} coefficient, all other
/// terms with r + s > N. Throws domain_error when the family is not
/// equimultiple or the tangent cone is not a pure power of a linear form
/// (with q(0) != 0, i.e. a monic-in-y representation).
FamPoly prepare_family(const FamPoly& F);

/// Substitution y <- yexpr (exact, Horner).
FamPoly substitute_y(const FamPoly& F, const FamPoly& yexpr);

struct EdgeFormResult {
    bool ok = false;
    UPoly<Q> theta;  // theta(lambda) when ok
    EquisingularityWitness witness;
};

/// Step-1(c) shape test: G = y^N - theta(lambda) x^M + terms with
/// r N + s M > N M and s < N - 1; theta(0) != 0.
EdgeFormResult edge_form_check(const FamPoly& G, long N, long M, int level);

EquisingularityReport cri1_equisingular(const FamPoly& F);

/// Expansion-shape verification when the characteristic data of the special
/// fiber is known: expansions F_{j+1} = F_j^{n_j} - theta_{j+1} M(m_j, 0) +
/// higher-weight terms at every level.
EquisingularityReport equi_the_check(const FamPoly& F, const CharData& c);

/// Jacobian Newton polygon: N(Res_y(t - f, f_y)) in the (t, x) plane
/// (abscissa = t exponent). Empty polygon when deg_y f < 2.
NewtonPolygon jacobian_polygon(const BiPoly& f);

/// Family jacobian resultant J(lambda, x, t); slots (k, i, j) = (lambda, x, t).
FamPoly jacobian_family(const FamPoly& F);

/// Steps 1-3 of the jacobian-polygon criterion: the generic-lambda polygon of
/// J must agree with its lambda = 0 polygon.
EquisingularityReport cri2_check(const FamPoly& F);

}  // namespace branchforge

#endif
