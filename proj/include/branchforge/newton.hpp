#ifndef BRANCHFORGE_NEWTON_HPP
#define BRANCHFORGE_NEWTON_HPP

#include <optional>
#include <vector>

#include "branchforge/poly.hpp"

namespace branchforge {

struct LatticePoint {
    long i = 0;
    long j = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

struct PolygonEdge {
    LatticePoint from;  // smaller abscissa, larger ordinate
    LatticePoint to;
    long p = 0;  // primitive inward normal (p, q), p*i + q*j constant on the edge
    long q = 0;
    long level = 0;    // value of p*i + q*j on the edge
    long lattice_len = 0;  // number of lattice segments: gcd(di, dj)
};

/// Newton polygon: convex hull of support + first quadrant. Vertices sorted by
/// increasing abscissa (hence strictly decreasing ordinate).
struct NewtonPolygon {
    std::vector<LatticePoint> vertices;
    std::vector<PolygonEdge> edges;

    bool operator==(const NewtonPolygon& o) const { return vertices == o.vertices; }

    /// Touches both coordinate axes.
    bool convenient() const {
        return !vertices.empty() && vertices.front().i == 0 && vertices.back().j == 0;
    }
};

NewtonPolygon newton_polygon_from_points(std::vector<LatticePoint> pts);
NewtonPolygon newton_polygon(const BiPoly& A);

/// Support projections for family polynomials: (x, y) support for a generic
/// lambda, and the (lambda-slot, x-slot) support used by jacobian polygons.
std::vector<LatticePoint> support_xy_generic(const FamPoly& A);
NewtonPolygon newton_polygon_xy_generic(const FamPoly& A);

/// Terms of A on the supporting line of direction (p, q):
/// all (i, j) in supp A with p*i + q*j minimal.
BiPoly symbolic_restriction(const BiPoly& A, long p, long q);

/// Restriction to a specific edge of newton_polygon(A); the edge must be
/// incident to the polygon.
BiPoly symbolic_restriction(const BiPoly& A, const PolygonEdge& edge);

/// Right triangle with legs on the axes and hypotenuse [(w,0), (0,h)].
struct LatticeTriangle {
    long w = 0;
    long h = 0;
};

/// Lattice points strictly inside the triangle.
long interior_lattice_count(const LatticeTriangle& T);

/// If P has exactly one compact edge running from (0, n*e) to (m*e, 0) with
/// gcd(n, m) = 1, returns (n, m, e).
struct SingleEdge {
    long n = 0;
    long m = 0;
    long e = 0;
};
std::optional<SingleEdge> single_edge_check(const NewtonPolygon& P);

/// Vertex set of the Minkowski sum (test support for N(A*B) = N(A) + N(B)).
NewtonPolygon minkowski_sum(const NewtonPolygon& A, const NewtonPolygon& B);

/// Twice the area enclosed between a convenient polygon and the axes.
long twice_area_under(const NewtonPolygon& P);

}  // namespace branchforge

#endif
