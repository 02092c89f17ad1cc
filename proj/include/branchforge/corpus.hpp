#ifndef BRANCHFORGE_CORPUS_HPP
#define BRANCHFORGE_CORPUS_HPP

#include <random>

#include "branchforge/puiseux.hpp"

namespace branchforge::corpus {

/// A randomly generated branch: rational parametrization with prescribed
/// characteristic structure, its defining polynomial and invariants.
struct BranchSample {
    PuiseuxParam param;
    BiPoly poly;
    CharData chars;
    SemigroupData gens;
};

/// Draws characteristic integers n_1 .. n_g (product <= nmax), characteristic
/// exponents below expmax and a sparse rational coefficient support whose gcd
/// filtration realizes exactly those exponents, then implicitizes.
inline BranchSample random_branch(std::mt19937_64& rng, long nmax = 12, long expmax = 40,
                                  int gmax = 3) {
    std::uniform_int_distribution<int> gd(1, gmax);
    std::uniform_int_distribution<long> nd(2, 3);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    auto rnd_q = [&](bool nonzero) {
        while (true) {
            Q v(num(rng), den(rng));
            v.canonicalize();
            if (!nonzero || sgn(v) != 0) return v;
        }
    };
    while (true) {
        int g = gd(rng);
        std::vector<long> nseq;
        long n = 1;
        bool ok = true;
        for (int j = 0; j < g; ++j) {
            long nj = nd(rng);
            if (n * nj > nmax) {
                ok = false;
                break;
            }
            nseq.push_back(nj);
            n *= nj;
        }
        if (!ok) continue;
        std::vector<long> e(static_cast<size_t>(g) + 1, 1);
        for (int j = g - 1; j >= 0; --j) e[static_cast<size_t>(j)] = e[static_cast<size_t>(j) + 1] * nseq[static_cast<size_t>(j)];
        // characteristic exponents: b_1 = e_1 m_1 with gcd(m_1, n_1) = 1 and
        // b_1 > n; then b_{j+1} = b_j + e_{j+1} k with gcd(k, n_{j+1}) = 1.
        std::uniform_int_distribution<long> md(nseq[0] + 1, std::max(nseq[0] + 1, 3 * nseq[0]));
        long m1 = md(rng);
        while (std::gcd(m1, nseq[0]) != 1) ++m1;
        std::vector<long> b{e[1] * m1};
        for (int j = 1; j < g; ++j) {
            std::uniform_int_distribution<long> kd(1, 5);
            long k = kd(rng);
            while (std::gcd(k, nseq[static_cast<size_t>(j)]) != 1) ++k;
            b.push_back(b.back() + e[static_cast<size_t>(j) + 1] * k);
        }
        if (b.back() > expmax || b.front() <= n) continue;

        BranchSample s;
        s.param.n = n;
        s.param.exact = true;
        // mandatory characteristic coefficients
        for (long bj : b) s.param.coeffs[static_cast<int>(bj)] = rnd_q(true);
        // optional fillers that do not disturb the gcd filtration
        for (long i = n; i < b[0]; ++i)
            if (i % n == 0 && coin(rng) < 0.25) s.param.coeffs[static_cast<int>(i)] = rnd_q(true);
        for (int j = 0; j + 1 < g; ++j)
            for (long i = b[static_cast<size_t>(j)] + 1; i < b[static_cast<size_t>(j) + 1]; ++i)
                if (i % e[static_cast<size_t>(j) + 1] == 0 && coin(rng) < 0.25)
                    s.param.coeffs[static_cast<int>(i)] = rnd_q(true);
        for (long i = b.back() + 1; i <= std::min(expmax, b.back() + 4); ++i)
            if (coin(rng) < 0.2) s.param.coeffs[static_cast<int>(i)] = rnd_q(true);
        int maxe = 0;
        for (const auto& [ee, vv] : s.param.coeffs) maxe = std::max(maxe, ee);
        s.param.trunc = maxe + 1;

        s.chars = char_exponents(s.param);
        s.gens = generators_from_char(s.chars);
        s.poly = implicitize(s.param);
        return s;
    }
}

}  // namespace branchforge::corpus

#endif
