#pragma once

#include "qcount/counts.hpp"
#include "qcount/poly.hpp"
#include "qcount/qanalogs.hpp"

#include <vector>

namespace qcount {

// Generating functions at a fixed integer q. Coefficient r of each
// polynomial is the count (or count difference) for rank r.

/// One step of the recurrence shared by every generating function here:
///   P(q^2 X)(1 - X)(1 - qX) + 2 q^n X (1 - X) P(qX) + q^{2n-1} X^2 P(X).
/// Maps the size n-1 polynomial to the size n one. Requires n >= 1.
PolyZ recurrence_step(const PolyZ& prev, unsigned n, const QParam& q);

/// sum_r a(n,r,q) X^r, coefficients taken from rank_count.
PolyZ rank_poly(unsigned n, const QParam& q);
/// The same, by iterating recurrence_step from the constant 1.
PolyZ rank_poly_rec(unsigned n, const QParam& q);

/// sum_r (f0 - f1) X^r as the product (X;q)_k * rank_poly(n-k)(q^k X).
PolyZ trace_diff_poly(unsigned n, unsigned k, const QParam& q);
/// The same, by iterating recurrence_step from (X;q)_k at size k.
PolyZ trace_diff_poly_rec(unsigned n, unsigned k, const QParam& q);

/// Row (trace_count(n, r, k, q, alpha))_{r = 0..n} built by the three-term
/// rank recursion in n, started from the n = k row given by the closed forms.
std::vector<BigCount> trace_count_row_rec(unsigned n, unsigned k, const QParam& q, TraceClass alpha);

} // namespace qcount
