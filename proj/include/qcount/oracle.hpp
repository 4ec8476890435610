#pragma once

#include "qcount/bigint.hpp"
#include "qcount/counts.hpp"
#include "qcount/gfq.hpp"

#include <cstdint>
#include <vector>

namespace qcount {

/// Exhaustive tallies of n x n matrices over a field by (rank, trace value).
///
/// The trace is the k-trace for enumerate_counts and tr(A X) for
/// trace_form_table. Cells are stored densely, (n + 1) x q.
class CountTable {
public:
    CountTable(FieldCtx ctx, unsigned n, unsigned k);

    [[nodiscard]] unsigned n() const { return n_; }
    [[nodiscard]] unsigned k() const { return k_; }
    [[nodiscard]] const FieldCtx& ctx() const { return ctx_; }

    [[nodiscard]] const BigCount& cell(unsigned r, FieldElem trace) const;
    void add(unsigned r, FieldElem trace, const BigCount& amount);

    [[nodiscard]] BigCount total() const;
    [[nodiscard]] BigCount rank_total(unsigned r) const;

    /// Whether every nonzero-trace cell in row r holds the same value.
    [[nodiscard]] bool nonzero_uniform(unsigned r) const;

    /// The trace-0 cell for Zero, the trace-1 cell for Nonzero.
    [[nodiscard]] const BigCount& class_cell(unsigned r, TraceClass c) const;

    friend bool operator==(const CountTable& a, const CountTable& b)
    {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.ctx_.q() == b.ctx_.q() && a.cells_ == b.cells_;
    }

private:
    FieldCtx ctx_;
    unsigned n_;
    unsigned k_;
    std::vector<BigCount> cells_;
};

/// Enumeration is refused beyond this many matrices.
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 28;

/// q^(n^2), saturating at UINT64_MAX.
std::uint64_t enumeration_size(unsigned n, std::uint32_t q);

/// Throws TooLarge when q^(n^2) exceeds kMaxEnumeration.
void check_enumeration_size(unsigned n, std::uint32_t q);

/// Serial reference: a single odometer over all n^2 entries (bottom-right
/// entry least significant), tallying (rank, k-trace).
CountTable enumerate_counts(unsigned n, unsigned k, const FieldCtx& ctx);

/// OpenMP version of enumerate_counts. The first-row index range is split
/// into `workers` contiguous blocks, one per thread, and the per-block
/// machine-word tallies are summed at the end. Identical to
/// enumerate_counts for every worker count.
CountTable partitioned_enumerate(unsigned n, unsigned k, const FieldCtx& ctx, unsigned workers);

/// Exhaustive tallies of X by (rank(X), tr(A X)). k() is rank(A).
CountTable trace_form_table(const MatGF& a);

/// |{X : rank(X) = r, tr(A X) = alpha}| by exhaustive enumeration.
BigCount trace_form_oracle(const MatGF& a, unsigned r, FieldElem alpha);

} // namespace qcount
