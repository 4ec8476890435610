#pragma once

#include "qcount/bigint.hpp"
#include "qcount/gfq.hpp"
#include "qcount/qanalogs.hpp"

#include <string_view>

namespace qcount {

/// Which side of the trace condition is being counted. For every nonzero
/// alpha the count is the same, so only the class of alpha matters.
enum class TraceClass { Zero, Nonzero };

std::string_view to_string(TraceClass c);

inline TraceClass trace_class(FieldElem alpha)
{
    return alpha.index == 0 ? TraceClass::Zero : TraceClass::Nonzero;
}

/// Count of n x n matrices of rank r whose k-trace (sum of the first k
/// diagonal entries) is in class `alpha`.
///
/// k = 0 is allowed: the empty trace is 0, so every matrix lands in the
/// Zero class. n = 0 is allowed and has the single empty matrix.
struct CountQuery {
    unsigned n = 0;
    unsigned r = 0;
    unsigned k = 0;
    QParam q;
    TraceClass alpha = TraceClass::Zero;

    /// Throws InvalidArgument unless r <= n and k <= n.
    void validate() const;
};

/// f0 - f1 for rank-r n x n matrices split by k-trace, from the alternating
/// sum over i of (-1)^i q^{i(i-1)/2 + k(r-i)} [k i]_q a(n-k, r-i, q).
SignedBig trace_diff(unsigned n, unsigned r, unsigned k, const QParam& q);

/// The count itself: the nonzero class is (a(n,r,q) - diff) / q, the zero
/// class is a(n,r,q) - (q-1) times that. Throws DivisionInexact if the
/// division is not exact and InvariantBreach on a negative result; neither
/// happens for a correct implementation.
BigCount trace_count(const CountQuery& query);

/// Closed form for the square case n = k: (-1)^r q^{r(r-1)/2} [k r]_q.
SignedBig full_trace_diff(unsigned k, unsigned r, const QParam& q);

/// Closed form for n = k + 1 and r <= k:
///   (-1)^r q^{r(r-1)/2} [k k-r]_q ((q^{k-r+2} - 1) + q^{k+1}(1 - q)) / (q^{k+1-r} - 1).
SignedBig codim1_trace_diff(unsigned k, unsigned r, const QParam& q);

/// Closed form for n = r = k + 1: (-1)^k q^{k(k+1)/2} (q - 1).
SignedBig codim1_full_rank_diff(unsigned k, const QParam& q);

/// |{X of rank r : tr(A X) = alpha}|. Depends on A only through its rank,
/// which becomes the k of a trace_count query. Throws DimensionMismatch if A
/// is not square, InvalidArgument if alpha is not in A's field or r > n.
BigCount trace_form_count(const MatGF& a, unsigned r, FieldElem alpha);

} // namespace qcount
