#ifndef BRANCHFORGE_SERIES_HPP
#define BRANCHFORGE_SERIES_HPP

#include <vector>

#include "branchforge/poly.hpp"

namespace branchforge {

/// Dense truncated power series over Q: coefficients of t^0 .. t^trunc.
/// All operations drop terms above the truncation order.
struct QSeries {
    int trunc = 0;
    std::vector<Q> c;  // size trunc + 1

    QSeries() : c(1) {}
    explicit QSeries(int tr) : trunc(tr), c(static_cast<size_t>(tr) + 1) {}

    static QSeries zero(int tr) { return QSeries(tr); }
    static QSeries constant(const Q& v, int tr) {
        QSeries s(tr);
        s.c[0] = v;
        return s;
    }
    static QSeries monomial(const Q& v, int e, int tr) {
        QSeries s(tr);
        if (e <= tr) s.c[static_cast<size_t>(e)] = v;
        return s;
    }

    bool is_zero_upto_trunc() const {
        for (const Q& v : c)
            if (!branchforge::is_zero(v)) return false;
        return true;
    }

    /// Order of the lowest nonzero term, or -1 if zero up to the truncation.
    int ord() const {
        for (size_t k = 0; k < c.size(); ++k)
            if (!branchforge::is_zero(c[k])) return static_cast<int>(k);
        return -1;
    }

    Q coeff(int e) const {
        if (e < 0 || e > trunc) return Q(0);
        return c[static_cast<size_t>(e)];
    }
};

QSeries series_add(const QSeries& a, const QSeries& b);
QSeries series_sub(const QSeries& a, const QSeries& b);
QSeries series_mul(const QSeries& a, const QSeries& b);
QSeries series_scale(const Q& s, const QSeries& a);
QSeries series_pow(const QSeries& a, int e);

/// Multiplicative inverse; requires a unit constant term.
QSeries series_inv(const QSeries& a);

/// Retruncate (extend pads with zeros, which is only sound when the source is
/// exact, i.e. a polynomial; shrinking is always sound).
QSeries series_retrunc(const QSeries& a, int tr);

/// Evaluate a bivariate polynomial at x = xs, y = ys.
QSeries series_eval(const BiPoly& p, const QSeries& xs, const QSeries& ys);

}  // namespace branchforge

#endif
