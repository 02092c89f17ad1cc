#include "branchforge/series.hpp"

#include <algorithm>

namespace branchforge {

QSeries series_add(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc, b.trunc));
    for (int k = 0; k <= r.trunc; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

QSeries series_sub(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc, b.trunc));
    for (int k = 0; k <= r.trunc; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc, b.trunc));
    for (int i = 0; i <= a.trunc && i <= r.trunc; ++i) {
        if (is_zero(a.c[i])) continue;
        int jmax = r.trunc - i;
        for (int j = 0; j <= b.trunc && j <= jmax; ++j) {
            if (is_zero(b.c[j])) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return r;
}

QSeries series_scale(const Q& s, const QSeries& a) {
    QSeries r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

QSeries series_pow(const QSeries& a, int e) {
    QSeries r = QSeries::constant(Q(1), a.trunc);
    QSeries base = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = series_mul(r, base);
        if (e > 1) base = series_mul(base, base);
    }
    return r;
}

QSeries series_inv(const QSeries& a) {
    if (is_zero(a.c[0])) throw domain_error("series_inv: constant term vanishes");
    QSeries r(a.trunc);
    Q inv0 = Q(1) / a.c[0];
    r.c[0] = inv0;
    for (int k = 1; k <= a.trunc; ++k) {
        Q acc(0);
        for (int j = 1; j <= k && j <= a.trunc; ++j) acc += a.c[j] * r.c[k - j];
        r.c[k] = -inv0 * acc;
    }
    return r;
}

QSeries series_retrunc(const QSeries& a, int tr) {
    QSeries r(tr);
    for (int k = 0; k <= std::min(tr, a.trunc); ++k) r.c[k] = a.c[k];
    return r;
}

QSeries series_eval(const BiPoly& p, const QSeries& xs, const QSeries& ys) {
    int tr = std::min(xs.trunc, ys.trunc);
    // Horner in y with x-only coefficients evaluated directly.
    UPoly<BiPoly> yc = ycoeffs(p);
    QSeries r = QSeries::zero(tr);
    for (int j = yc.deg(); j >= 0; --j) {
        r = series_mul(r, ys);
        if (j <= yc.deg() && !yc.c[j].is_zero()) {
            // Evaluate the x-only coefficient at xs.
            QSeries cx = QSeries::zero(tr);
            for (const auto& [m, q] : yc.c[j].terms()) {
                QSeries xe = series_pow(xs, m.i);
                cx = series_add(cx, series_scale(q, xe));
            }
            r = series_add(r, cx);
        }
    }
    return r;
}

}  // namespace branchforge
