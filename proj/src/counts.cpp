#include "qcount/counts.hpp"

#include "qcount/errors.hpp"

#include <algorithm>
#include <string>

namespace qcount {

std::string_view to_string(TraceClass c) { return c == TraceClass::Zero ? "zero" : "nonzero"; }

void CountQuery::validate() const
{
    if (r > n) {
        throw InvalidArgument("rank r = " + std::to_string(r) + " exceeds n = " + std::to_string(n));
    }
    if (k > n) {
        throw KOutOfRange("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
}

SignedBig trace_diff(unsigned n, unsigned r, unsigned k, const QParam& q)
{
    if (r > n || k > n) {
        throw InvalidArgument("trace_diff needs r <= n and k <= n");
    }
    SignedBig sum = 0;
    for (unsigned i = 0; i <= std::min(r, k); ++i) {
        const unsigned long exponent = binom2(i).get_ui() + static_cast<unsigned long>(k) * (r - i);
        BigInt term = ipow(q.q(), exponent) * gauss_binom(k, i, q) * rank_count(n - k, r - i, q);
        if (i % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

BigCount trace_count(const CountQuery& query)
{
    query.validate();
    const BigInt total = rank_count(query.n, query.r, query.q);
    const BigInt nonzero = exact_div(total - trace_diff(query.n, query.r, query.k, query.q),
                                     query.q.q(), "trace_count");
    const BigInt result =
        query.alpha == TraceClass::Nonzero ? nonzero : BigInt(total - (query.q.q() - 1) * nonzero);
    if (result < 0) {
        throw InvariantBreach("trace_count produced a negative cardinality " + result.get_str());
    }
    return result;
}

SignedBig full_trace_diff(unsigned k, unsigned r, const QParam& q)
{
    if (r > k) {
        throw InvalidArgument("full_trace_diff needs r <= k");
    }
    BigInt v = ipow(q.q(), binom2(r).get_ui()) * gauss_binom(k, r, q);
    return r % 2 == 0 ? v : BigInt(-v);
}

SignedBig codim1_trace_diff(unsigned k, unsigned r, const QParam& q)
{
    if (r > k) {
        throw InvalidArgument("codim1_trace_diff needs r <= k");
    }
    const BigInt& qq = q.q();
    const BigInt bracket = (ipow(qq, k - r + 2) - 1) + ipow(qq, k + 1) * (1 - qq);
    const BigInt num = ipow(qq, binom2(r).get_ui()) * gauss_binom(k, k - r, q) * bracket;
    BigInt v = exact_div(num, ipow(qq, k + 1 - r) - 1, "codim1_trace_diff");
    return r % 2 == 0 ? v : BigInt(-v);
}

SignedBig codim1_full_rank_diff(unsigned k, const QParam& q)
{
    BigInt v = ipow(q.q(), binom2(k + 1).get_ui()) * (q.q() - 1);
    return k % 2 == 0 ? v : BigInt(-v);
}

BigCount trace_form_count(const MatGF& a, unsigned r, FieldElem alpha)
{
    if (!a.is_square()) {
        throw DimensionMismatch("trace form needs a square matrix");
    }
    if (!a.ctx().contains(alpha)) {
        throw InvalidArgument("alpha is not an element of the matrix field");
    }
    const auto n = static_cast<unsigned>(a.rows());
    const auto k = static_cast<unsigned>(mat_rank(a));
    return trace_count(CountQuery{n, r, k, a.ctx().qparam(), trace_class(alpha)});
}

} // namespace qcount
