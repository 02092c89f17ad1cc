#include "branchforge/milnor.hpp"

namespace branchforge {

MilnorComplex milnor_complex(const CharData& c) {
    MilnorComplex mc;
    mc.e = c.e;
    for (int j = 1; j <= c.g(); ++j) {
        long ej = c.e[static_cast<size_t>(j)];
        mc.triangles.push_back(
            {c.mseq[static_cast<size_t>(j - 1)] * ej, c.nseq[static_cast<size_t>(j - 1)] * ej});
    }
    return mc;
}

long milnor_resultant(const BiPoly& f) {
    if (!is_monic_in_y(f)) throw domain_error("milnor_resultant: f must be monic in y");
    BiPoly fy = partial_y(f);
    long a;
    try {
        a = intersection_mult(f, fy);
    } catch (const domain_error&) {
        throw domain_error("not reduced");
    }
    long b = intersection_mult(f, bp_x(1));
    return a - b + 1;
}

long milnor_semigroup(const SemigroupData& s) {
    auto chk = validate_plane_semigroup(s);
    if (!chk.ok) throw domain_error("milnor_semigroup: invalid semigroup (" + chk.witness + ")");
    return conductor(s);
}

long milnor_lattice(const CharData& c) {
    MilnorComplex mc = milnor_complex(c);
    long acc = 0;
    for (size_t j = 0; j < mc.triangles.size(); ++j)
        acc += interior_lattice_count(mc.triangles[j]) + mc.e[j + 1] - 1;
    return 2 * acc;
}

long kouchnirenko_nd(const NewtonPolygon& P) {
    if (!P.convenient()) throw domain_error("kouchnirenko_nd: polygon must be convenient");
    long a = P.vertices.back().i;   // x-axis intercept
    long b = P.vertices.front().j;  // y-axis intercept
    return twice_area_under(P) - a - b + 1;
}

}  // namespace branchforge
