#ifndef BRANCHFORGE_RATIONAL_HPP
#define BRANCHFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace branchforge {

// Exact rational coefficients. mpq_class keeps the canonical form we rely on
// (reduced, positive denominator, zero as 0/1).
using Q = mpq_class;
using Z = mpz_class;

inline Q q_of(long num, long den = 1) {
    Q r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Q& a) { return sgn(a) == 0; }

inline bool is_integer(const Q& a) { return a.get_den() == 1; }

/// Canonical "p" or "p/q" rendering used across text and JSON output.
inline std::string q_str(const Q& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline Z z_gcd(const Z& a, const Z& b) {
    Z r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline long lgcd(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Exact integer k-th root when it exists.
inline std::optional<Z> z_kth_root(const Z& a, unsigned long k) {
    if (sgn(a) < 0 && k % 2 == 0) return std::nullopt;
    Z r;
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return r;
}

/// Rational k-th root when it exists (numerator and denominator both exact
/// k-th powers).
inline std::optional<Q> q_kth_root(const Q& a, unsigned long k) {
    auto n = z_kth_root(a.get_num(), k);
    if (!n) return std::nullopt;
    auto d = z_kth_root(a.get_den(), k);
    if (!d) return std::nullopt;
    Q r(*n, *d);
    r.canonicalize();
    return r;
}

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when the Puiseux oracle would need coefficients outside Q, or when
/// a truncation bound is exhausted. The criterion pipelines never throw this.
struct oracle_error : std::runtime_error {
    explicit oracle_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace branchforge

#endif
