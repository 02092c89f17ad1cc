#include "branchforge/deform.hpp"

#include <sstream>

#include "branchforge/milnor.hpp"
#include "branchforge/puiseux.hpp"

namespace branchforge {

long omega_weight(int j, long r, long s, const CharData& c) {
    if (j < 1 || j > c.g()) throw domain_error("omega_weight: level out of range");
    long nj = c.nseq[static_cast<size_t>(j - 1)];
    long mj = c.mseq[static_cast<size_t>(j - 1)];
    long ej = c.e[static_cast<size_t>(j)];
    if (r < 0 || s < 0 || r * nj + s * mj > ej * nj * mj)
        throw domain_error("omega_weight: point outside the triangle");
    return ej * (ej * nj * mj - r * nj - s * mj);
}

MsqhPoly build_msqh(const BiPoly& f, const CharData& c, const std::vector<BiPoly>& roots,
                    const MsqhSpec& spec) {
    MsqhPoly P;
    P.base = f;
    P.g = c.g();
    ResolutionLedger L = ledger_from_char(c);
    for (const auto& [j, table] : spec.tables) {
        if (j < 1 || j > c.g()) throw domain_error("build_msqh: level out of range");
        auto zero_it = table.find({0, 0});
        if (zero_it == table.end() || is_zero(zero_it->second))
            throw domain_error("build_msqh: A_{0,0} must be nonzero at every level");
        long nj = c.nseq[static_cast<size_t>(j - 1)];
        long mj = c.mseq[static_cast<size_t>(j - 1)];
        long ej = c.e[static_cast<size_t>(j)];
        for (const auto& [rs, A] : table) {
            if (is_zero(A)) continue;
            auto [r, s] = rs;
            if (r < 0 || s < 0 || r * nj + s * mj >= ej * nj * mj)
                throw domain_error("build_msqh: support must lie strictly below the edge");
            MsqhTerm t;
            t.level = j;
            t.r = r;
            t.s = s;
            t.coeff = A;
            t.omega = omega_weight(j, r, s, c);
            if (j == 1) {
                t.monomial = bp_term(Q(1), static_cast<int>(r), static_cast<int>(s));
            } else {
                auto w = monomial_correspondence(j, r, s, L);
                t.monomial = monomial_concrete(w, roots);
            }
            P.terms.push_back(std::move(t));
        }
    }
    return P;
}

BiPoly specialize(const MsqhPoly& P, const std::vector<Q>& tvals) {
    if (static_cast<int>(tvals.size()) != P.g)
        throw domain_error("specialize: need one value per parameter");
    BiPoly acc = P.base;
    for (const auto& t : P.terms) {
        Q v = t.coeff;
        const Q& tv = tvals[static_cast<size_t>(t.level - 1)];
        for (long k = 0; k < t.omega; ++k) v *= tv;
        acc += v * t.monomial;
    }
    return acc;
}

std::string to_string(const MsqhPoly& P) {
    std::ostringstream os;
    os << to_string(P.base);
    for (const auto& t : P.terms) {
        os << " + " << q_str(t.coeff) << "*t" << t.level << "^" << t.omega << "*("
           << to_string(t.monomial) << ")";
    }
    return os.str();
}

GenericityReport genericity_check(const MsqhSpec& spec, const CharData& c) {
    GenericityReport rep;
    for (int j = 1; j < c.g(); ++j) {
        long ej = c.e[static_cast<size_t>(j)];
        GenericityLevel lvl;
        lvl.j = j;
        lvl.q.assign(static_cast<size_t>(ej) + 1, Q(0));
        lvl.q[static_cast<size_t>(ej)] = Q(1);
        auto it = spec.tables.find(j + 1);
        if (it != spec.tables.end())
            for (const auto& [rs, A] : it->second)
                if (rs.first == 0 && rs.second < ej) lvl.q[static_cast<size_t>(rs.second)] = A;
        // distinct roots <=> gcd(q, q') is constant
        UPoly<Q> q(std::vector<Q>(lvl.q.begin(), lvl.q.end()));
        UPoly<Q> dq;
        dq.c.resize(q.c.size() - 1);
        for (size_t k = 1; k < q.c.size(); ++k) dq.c[k - 1] = Q(static_cast<long>(k)) * q.c[k];
        dq.trim();
        // Euclidean gcd over Q[v].
        UPoly<Q> A = q, B = dq;
        while (!B.is_zero()) {
            UPoly<Q> R = A;
            while (!R.is_zero() && R.deg() >= B.deg()) {
                Q f = R.lead() / B.lead();
                int k = R.deg() - B.deg();
                for (int t = 0; t <= B.deg(); ++t) R.c[k + t] -= f * B.c[t];
                R.trim();
            }
            A = B;
            B = R;
        }
        lvl.distinct_roots = A.deg() == 0;
        rep.generic = rep.generic && lvl.distinct_roots;
        rep.levels.push_back(std::move(lvl));
    }
    return rep;
}

bool prop_milnor_identity(const CharData& c) {
    long acc = 0;
    for (int j = 1; j <= c.g(); ++j) {
        long nj = c.nseq[static_cast<size_t>(j - 1)] * c.e[static_cast<size_t>(j)];
        long mj = c.mseq[static_cast<size_t>(j - 1)] * c.e[static_cast<size_t>(j)];
        NewtonPolygon P = newton_polygon_from_points({{0, nj}, {mj, 0}});
        acc += kouchnirenko_nd(P) + c.e[static_cast<size_t>(j)] - 1;
    }
    return acc == milnor_semigroup(generators_from_char(c));
}

}  // namespace branchforge
