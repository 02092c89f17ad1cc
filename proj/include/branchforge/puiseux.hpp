#ifndef BRANCHFORGE_PUISEUX_HPP
#define BRANCHFORGE_PUISEUX_HPP

#include <map>
#include <vector>

#include "branchforge/algebra.hpp"
#include "branchforge/semigroup.hpp"
#include "branchforge/series.hpp"

namespace branchforge {

/// Parametrization of one branch: x = t^n, y = sum coeffs[i] t^i, coefficients
/// exact up to t^trunc. `exact` marks t-polynomial parametrizations (generator
/// made), for which the support carries no truncation uncertainty.
struct PuiseuxParam {
    long n = 1;
    std::map<int, Q> coeffs;  // nonzero coefficients only
    int trunc = 0;
    bool exact = false;
};

/// All rational roots (with multiplicities) of a nonzero rational polynomial.
/// Complete: every rational root is found (Sturm isolation plus bounded-
/// denominator reconstruction), without integer factorization.
std::vector<std::pair<Q, int>> rational_roots(const UPoly<Q>& P);

/// Newton-Puiseux with rational coefficients: one parametrization per branch
/// of f through the origin, coefficients to order trunc. Requires x not
/// dividing f and f(0,0) = 0. Throws oracle_error when some branch needs
/// irrational Puiseux coefficients, domain_error("not square-free") when a
/// repeated factor is detected.
std::vector<PuiseuxParam> newton_puiseux(const BiPoly& f, int trunc);

/// Default truncation policy: 2 * deg_x * deg_y, doubled once on demand.
int default_trunc(const BiPoly& f);

/// ord_t h(x(t), y(t)); throws oracle_error("insufficient precision") when the
/// order cannot be resolved within the parametrization's truncation.
int ord_along(const PuiseuxParam& p, const BiPoly& h);

/// Characteristic exponents by the gcd filtration of the support.
CharData char_exponents(const PuiseuxParam& p);

/// Defining polynomial of a t-polynomial parametrization: monic in y of degree
/// n with f(x(t), y(t)) = 0, computed as det(y I - C) for the multiplication
/// matrix C of y(t) on Q[x][t]/(t^n - x).
BiPoly implicitize(const PuiseuxParam& p);

bool is_irreducible_oracle(const BiPoly& f);

/// Branches with the retry-once truncation policy applied to characteristic
/// data extraction.
struct BranchAnalysis {
    std::vector<PuiseuxParam> params;
    std::vector<CharData> chars;
};
BranchAnalysis analyze_branches(const BiPoly& f);

}  // namespace branchforge

#endif
