#ifndef BRANCHFORGE_TESTS_SUPPORT_HPP
#define BRANCHFORGE_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "branchforge/poly.hpp"
#include "branchforge/semigroup.hpp"

namespace branchforge::testsupport {

inline BiPoly cusp() {  // y^2 - x^3
    BiPoly f = bp_y(2);
    f -= bp_x(3);
    return f;
}

inline BiPoly quartic() {  // (y^2 - x^3)^2 - 4 x^5 y - x^7
    BiPoly f2 = cusp();
    BiPoly f = f2 * f2;
    f -= bp_term(Q(4), 5, 1);
    f -= bp_term(Q(1), 7, 0);
    return f;
}

inline Q random_q(std::mt19937_64& rng, int num_range = 9, int den_range = 4) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return q_of(num(rng), den(rng));
}

inline Q random_nonzero_q(std::mt19937_64& rng, int num_range = 9, int den_range = 4) {
    Q v = random_q(rng, num_range, den_range);
    while (is_zero(v)) v = random_q(rng, num_range, den_range);
    return v;
}

inline BiPoly random_bipoly(std::mt19937_64& rng, int dx, int dy, double density = 0.5) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    BiPoly p;
    for (int i = 0; i <= dx; ++i)
        for (int j = 0; j <= dy; ++j)
            if (coin(rng) < density) p.add_term({i, j}, random_q(rng));
    return p;
}

inline BiPoly random_monic_y(std::mt19937_64& rng, int dy, int dx, double density = 0.5) {
    BiPoly p = bp_y(dy);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i <= dx; ++i)
        for (int j = 0; j < dy; ++j)
            if (coin(rng) < density) p.add_term({i, j}, random_q(rng));
    return p;
}

/// Random valid plane semigroup: draw the characteristic-integer targets,
/// then generators with the forced congruences; validated before returning.
inline SemigroupData random_semigroup(std::mt19937_64& rng, int gmax = 3, long step_cap = 12) {
    while (true) {
        std::uniform_int_distribution<int> gd(1, gmax);
        int g = gd(rng);
        std::uniform_int_distribution<long> nd(2, 4);
        std::vector<long> n(g + 1, 1);
        for (int j = 1; j <= g; ++j) n[j] = nd(rng);
        std::vector<long> e(g + 1, 1);
        for (int j = g - 1; j >= 0; --j) e[j] = e[j + 1] * n[j + 1];
        std::vector<long> gens;
        gens.push_back(e[0]);
        std::uniform_int_distribution<long> kd(1, step_cap);
        // b̄_1 = e_1 * m_1 with gcd(m_1, n_1) = 1 and m_1 > n_1.
        long m1 = n[1] + kd(rng);
        while (std::gcd(m1, n[1]) != 1) ++m1;
        gens.push_back(e[1] * m1);
        for (int j = 2; j <= g; ++j) {
            long k = kd(rng);
            while (std::gcd(k, n[j]) != 1) ++k;
            gens.push_back(n[j - 1] * gens[j - 1] + e[j] * k);
        }
        SemigroupData s{gens};
        if (validate_plane_semigroup(s).ok) return s;
    }
}

}  // namespace branchforge::testsupport

#endif
