#include "qcount/genfun.hpp"

#include "qcount/errors.hpp"

namespace qcount {

PolyZ recurrence_step(const PolyZ& prev, unsigned n, const QParam& q)
{
    if (n < 1) {
        throw InvalidArgument("recurrence_step needs n >= 1");
    }
    const BigInt& qq = q.q();
    const PolyZ one_minus_x{1, -1};
    const PolyZ one_minus_qx(std::vector<BigInt>{BigInt(1), BigInt(-qq)});

    PolyZ out = scale_arg(prev, qq * qq) * one_minus_x * one_minus_qx;
    out += shift_up(scale_arg(prev, qq) * one_minus_x, 1) * BigInt(2 * ipow(qq, n));
    out += shift_up(prev, 2) * ipow(qq, 2 * n - 1);
    return out;
}

PolyZ rank_poly(unsigned n, const QParam& q)
{
    std::vector<BigInt> coeffs(n + 1);
    for (unsigned r = 0; r <= n; ++r) {
        coeffs[r] = rank_count(n, r, q);
    }
    return PolyZ(std::move(coeffs));
}

PolyZ rank_poly_rec(unsigned n, const QParam& q)
{
    PolyZ p = PolyZ::constant(1);
    for (unsigned m = 1; m <= n; ++m) {
        p = recurrence_step(p, m, q);
    }
    return p;
}

PolyZ trace_diff_poly(unsigned n, unsigned k, const QParam& q)
{
    if (k > n) {
        throw KOutOfRange("trace_diff_poly needs k <= n");
    }
    return q_pochhammer_poly(k, q) * scale_arg(rank_poly(n - k, q), ipow(q.q(), k));
}

PolyZ trace_diff_poly_rec(unsigned n, unsigned k, const QParam& q)
{
    if (k > n) {
        throw KOutOfRange("trace_diff_poly_rec needs k <= n");
    }
    PolyZ p = q_pochhammer_poly(k, q);
    for (unsigned m = k + 1; m <= n; ++m) {
        p = recurrence_step(p, m, q);
    }
    return p;
}

std::vector<BigCount> trace_count_row_rec(unsigned n, unsigned k, const QParam& q, TraceClass alpha)
{
    if (k > n) {
        throw KOutOfRange("trace_count_row_rec needs k <= n");
    }
    const BigInt& qq = q.q();
    std::vector<BigCount> row(k + 1);
    for (unsigned r = 0; r <= k; ++r) {
        row[r] = trace_count(CountQuery{k, r, k, q, alpha});
    }
    for (unsigned m = k + 1; m <= n; ++m) {
        std::vector<BigCount> next(m + 1);
        auto prev = [&](unsigned idx) { return idx < row.size() ? row[idx] : BigInt(0); };
        for (unsigned r = 0; r <= m; ++r) {
            BigInt v = prev(r) * ipow(qq, 2 * r);
            if (r >= 1) {
                const BigInt t = ipow(qq, m - r + 1);
                v += prev(r - 1) * ipow(qq, 2 * r - 2) * (2 * t - 1 - qq);
            }
            if (r >= 2) {
                const BigInt t = ipow(qq, m - r + 1) - 1;
                v += prev(r - 2) * ipow(qq, 2 * r - 3) * t * t;
            }
            next[r] = std::move(v);
        }
        row = std::move(next);
    }
    return row;
}

} // namespace qcount
