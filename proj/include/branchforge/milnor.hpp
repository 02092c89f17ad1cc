#ifndef BRANCHFORGE_MILNOR_HPP
#define BRANCHFORGE_MILNOR_HPP

#include "branchforge/algebra.hpp"
#include "branchforge/newton.hpp"
#include "branchforge/semigroup.hpp"

namespace branchforge {

/// The glued triangle complex of a branch: triangle Delta_j has hypotenuse
/// from (m_j e_j, 0) to (0, n_j e_j); edges Gamma_{j} and Xi_{j+1} share the
/// integral length e_j.
struct MilnorComplex {
    std::vector<LatticeTriangle> triangles;
    std::vector<long> e;  // e_0 .. e_g
};

MilnorComplex milnor_complex(const CharData& c);

/// mu = (f, f_y)_0 - (f, x)_0 + 1. Throws domain_error("not reduced") when the
/// y-discriminant vanishes.
long milnor_resultant(const BiPoly& f);

/// mu = sum (n_j - 1) b̄_j - b̄_0 + 1.
long milnor_semigroup(const SemigroupData& s);

/// Twice the lattice point count of the complex:
/// mu = 2 * sum_j (#interior(Delta_j) + e_j - 1).
long milnor_lattice(const CharData& c);

/// Kouchnirenko's formula for a convenient polygon: 2*Area - a - b + 1.
long kouchnirenko_nd(const NewtonPolygon& P);

}  // namespace branchforge

#endif
