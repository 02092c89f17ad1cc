#include "branchforge/newton.hpp"

#include <algorithm>
#include <numeric>

namespace branchforge {

NewtonPolygon newton_polygon_from_points(std::vector<LatticePoint> pts) {
    if (pts.empty()) throw domain_error("newton_polygon: zero polynomial");
    std::sort(pts.begin(), pts.end(),
              [](const LatticePoint& a, const LatticePoint& b) {
                  return a.i != b.i ? a.i < b.i : a.j < b.j;
              });
    // Pareto-minimal points: for each abscissa the lowest ordinate, then drop
    // points dominated by an earlier (lower-left) one.
    std::vector<LatticePoint> minimal;
    for (const auto& p : pts) {
        if (!minimal.empty() && minimal.back().i == p.i) continue;  // keep min j per i
        if (!minimal.empty() && minimal.back().j <= p.j) continue;  // dominated
        minimal.push_back(p);
    }
    // Monotone chain: keep strictly convex corners (slopes strictly increasing).
    std::vector<LatticePoint> hull;
    for (const auto& p : minimal) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            long cross = (b.i - a.i) * (p.j - b.j) - (b.j - a.j) * (p.i - b.i);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    NewtonPolygon P;
    P.vertices = hull;
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        PolygonEdge e;
        e.from = hull[k];
        e.to = hull[k + 1];
        long di = e.to.i - e.from.i;
        long dj = e.from.j - e.to.j;
        long g = std::gcd(di, dj);
        e.p = dj / g;
        e.q = di / g;
        e.level = e.p * e.from.i + e.q * e.from.j;
        e.lattice_len = g;
        P.edges.push_back(e);
    }
    return P;
}

NewtonPolygon newton_polygon(const BiPoly& A) {
    std::vector<LatticePoint> pts;
    for (const auto& [m, c] : A.terms()) pts.push_back({m.i, m.j});
    return newton_polygon_from_points(std::move(pts));
}

std::vector<LatticePoint> support_xy_generic(const FamPoly& A) {
    std::vector<LatticePoint> pts;
    for (const auto& [m, c] : A.terms()) pts.push_back({m.i, m.j});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

NewtonPolygon newton_polygon_xy_generic(const FamPoly& A) {
    return newton_polygon_from_points(support_xy_generic(A));
}

BiPoly symbolic_restriction(const BiPoly& A, long p, long q) {
    if (A.is_zero()) throw domain_error("symbolic_restriction: zero polynomial");
    long best = 0;
    bool have = false;
    for (const auto& [m, c] : A.terms()) {
        long v = p * m.i + q * m.j;
        if (!have || v < best) {
            best = v;
            have = true;
        }
    }
    BiPoly r;
    for (const auto& [m, c] : A.terms())
        if (p * m.i + q * m.j == best) r.add_term(m, c);
    return r;
}

BiPoly symbolic_restriction(const BiPoly& A, const PolygonEdge& edge) {
    NewtonPolygon P = newton_polygon(A);
    bool found = false;
    for (const auto& e : P.edges)
        if (e.from == edge.from && e.to == edge.to) found = true;
    if (!found) throw domain_error("symbolic_restriction: face not incident to the polygon");
    return symbolic_restriction(A, edge.p, edge.q);
}

long interior_lattice_count(const LatticeTriangle& T) {
    if (T.w <= 0 || T.h <= 0) throw domain_error("interior_lattice_count: degenerate triangle");
    long count = 0;
    for (long x = 1; x < T.w; ++x)
        for (long y = 1; y < T.h; ++y)
            if (T.h * x + T.w * y < T.w * T.h) ++count;
    return count;
}

std::optional<SingleEdge> single_edge_check(const NewtonPolygon& P) {
    if (P.edges.size() != 1) return std::nullopt;
    const PolygonEdge& e = P.edges[0];
    if (e.from.i != 0 || e.to.j != 0) return std::nullopt;
    long H = e.from.j, W = e.to.i;
    long g = std::gcd(H, W);
    SingleEdge s;
    s.n = H / g;
    s.m = W / g;
    s.e = g;
    return s;  // gcd(n, m) = 1 by construction
}

NewtonPolygon minkowski_sum(const NewtonPolygon& A, const NewtonPolygon& B) {
    std::vector<LatticePoint> pts;
    for (const auto& a : A.vertices)
        for (const auto& b : B.vertices) pts.push_back({a.i + b.i, a.j + b.j});
    return newton_polygon_from_points(std::move(pts));
}

long twice_area_under(const NewtonPolygon& P) {
    if (!P.convenient()) throw domain_error("twice_area_under: polygon must be convenient");
    // Shoelace over (0,0) -> (0,h) -> vertices -> (w,0) -> (0,0).
    std::vector<LatticePoint> ring;
    ring.push_back({0, 0});
    for (const auto& v : P.vertices) ring.push_back(v);
    ring.push_back({0, 0});
    long acc = 0;
    for (size_t k = 0; k + 1 < ring.size(); ++k)
        acc += ring[k].i * ring[k + 1].j - ring[k + 1].i * ring[k].j;
    return acc < 0 ? -acc : acc;
}

}  // namespace branchforge
