#include "branchforge/semigroup.hpp"

#include <numeric>

namespace branchforge {

namespace {

long mod_inverse(long a, long m) {
    long t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw domain_error("mod_inverse: not invertible");
    return ((t % m) + m) % m;
}

std::vector<long> gcd_chain(const std::vector<long>& gens) {
    std::vector<long> e;
    long acc = 0;
    for (long v : gens) {
        acc = std::gcd(acc, v);
        e.push_back(acc);
    }
    return e;
}

}  // namespace

std::vector<long> SemigroupData::e_chain() const { return gcd_chain(gens); }

std::vector<long> SemigroupData::n_chain() const {
    auto e = e_chain();
    std::vector<long> n;
    for (size_t j = 1; j < e.size(); ++j) n.push_back(e[j - 1] / e[j]);
    return n;
}

CharData make_char_data(long n, std::vector<long> b) {
    if (n < 1) throw domain_error("make_char_data: multiplicity must be positive");
    CharData c;
    c.n = n;
    c.b = std::move(b);
    c.e.push_back(n);
    long prev = 0;
    for (size_t j = 0; j < c.b.size(); ++j) {
        if (c.b[j] <= prev) throw domain_error("make_char_data: exponents must increase");
        prev = c.b[j];
        long ej = std::gcd(c.e.back(), c.b[j]);
        if (ej == c.e.back()) throw domain_error("make_char_data: gcd chain stalls");
        c.nseq.push_back(c.e.back() / ej);
        c.e.push_back(ej);
    }
    if (c.e.back() != 1) throw domain_error("make_char_data: gcd chain does not reach 1");
    for (size_t j = 0; j < c.b.size(); ++j) {
        long num = (j == 0) ? c.b[0] : c.b[j] - c.b[j - 1];
        c.mseq.push_back(num / c.e[j + 1]);
    }
    return c;
}

SemigroupData generators_from_char(const CharData& c) {
    SemigroupData s;
    s.gens.push_back(c.n);
    if (c.g() >= 1) s.gens.push_back(c.b[0]);
    for (int j = 1; j < c.g(); ++j)
        s.gens.push_back(c.nseq[j - 1] * s.gens[j] + c.b[j] - c.b[j - 1]);
    return s;
}

CharData char_from_generators(const SemigroupData& s) {
    auto chk = validate_plane_semigroup(s);
    if (!chk.ok) throw domain_error("char_from_generators: invalid semigroup (" + chk.witness + ")");
    auto nseq = s.n_chain();
    std::vector<long> b;
    if (s.g() >= 1) b.push_back(s.gens[1]);
    for (int j = 1; j < s.g(); ++j)
        b.push_back(s.gens[j + 1] - nseq[j - 1] * s.gens[j] + b[j - 1]);
    return make_char_data(s.gens[0], b);
}

std::optional<TeeExpansion> tee_expand(long v, const std::vector<long>& gens) {
    if (gens.empty()) throw domain_error("tee_expand: no generators");
    if (v < 0) return std::nullopt;
    auto e = gcd_chain(gens);
    int h = static_cast<int>(gens.size()) - 1;
    std::vector<long> eta(gens.size(), 0);
    long rest = v;
    for (int l = h; l >= 1; --l) {
        long nl = e[l - 1] / e[l];
        if (rest % e[l] != 0) return std::nullopt;
        // Solve eta * (b̄_l / e_l) = rest / e_l  (mod n_l); unique in [0, n_l).
        long target = (rest / e[l]) % nl;
        long base = (gens[l] / e[l]) % nl;
        long etal = (nl == 1) ? 0 : (target * mod_inverse(base, nl)) % nl;
        eta[l] = etal;
        rest -= etal * gens[l];
        if (rest < 0) return std::nullopt;
    }
    if (rest % gens[0] != 0) return std::nullopt;
    eta[0] = rest / gens[0];
    return TeeExpansion{eta};
}

SemigroupCheck validate_plane_semigroup(const SemigroupData& s) {
    if (s.gens.empty()) return {false, "no generators"};
    for (long v : s.gens)
        if (v <= 0) return {false, "non-positive generator"};
    for (size_t j = 1; j < s.gens.size(); ++j)
        if (s.gens[j] <= s.gens[j - 1])
            return {false, "generators not increasing at index " + std::to_string(j)};
    auto e = gcd_chain(s.gens);
    for (size_t j = 1; j < e.size(); ++j)
        if (e[j] == e[j - 1])
            return {false, "gcd chain stalls at index " + std::to_string(j)};
    if (e.back() != 1) return {false, "gcd chain does not reach 1"};
    for (size_t j = 1; j < s.gens.size(); ++j) {
        std::vector<long> prefix(s.gens.begin(), s.gens.begin() + j);
        if (tee_expand(s.gens[j], prefix))
            return {false, "generator " + std::to_string(j) + " not minimal"};
        long nj = e[j - 1] / e[j];
        if (!tee_expand(nj * s.gens[j], prefix))
            return {false,
                    "n_j b̄_j not representable over previous generators at level " +
                        std::to_string(j)};
        if (j + 1 < s.gens.size() && nj * s.gens[j] >= s.gens[j + 1])
            return {false, "n_j b̄_j >= b̄_{j+1} at level " + std::to_string(j)};
    }
    return {true, ""};
}

std::vector<MonomialCurveEquation> monomial_curve_equations(const SemigroupData& s) {
    auto chk = validate_plane_semigroup(s);
    if (!chk.ok)
        throw domain_error("monomial_curve_equations: invalid semigroup (" + chk.witness + ")");
    auto nseq = s.n_chain();
    std::vector<MonomialCurveEquation> eqs;
    for (int j = 1; j <= s.g(); ++j) {
        std::vector<long> prefix(s.gens.begin(), s.gens.begin() + j);
        auto t = tee_expand(nseq[j - 1] * s.gens[j], prefix);
        if (!t) throw domain_error("monomial_curve_equations: representation missing");
        eqs.push_back({j, nseq[j - 1], t->eta});
    }
    return eqs;
}

long conductor(const SemigroupData& s) {
    auto nseq = s.n_chain();
    long acc = 1 - s.gens[0];
    for (int j = 1; j <= s.g(); ++j) acc += (nseq[j - 1] - 1) * s.gens[j];
    return acc;
}

}  // namespace branchforge
