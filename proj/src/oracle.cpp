#include "qcount/oracle.hpp"

#include "qcount/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace qcount {

CountTable::CountTable(FieldCtx ctx, unsigned n, unsigned k)
    : ctx_(std::move(ctx)), n_(n), k_(k), cells_(std::size_t{n + 1} * ctx_.q())
{
}

const BigCount& CountTable::cell(unsigned r, FieldElem trace) const
{
    return cells_.at(std::size_t{r} * ctx_.q() + trace.index);
}

void CountTable::add(unsigned r, FieldElem trace, const BigCount& amount)
{
    cells_.at(std::size_t{r} * ctx_.q() + trace.index) += amount;
}

BigCount CountTable::total() const
{
    BigCount sum = 0;
    for (const auto& c : cells_) {
        sum += c;
    }
    return sum;
}

BigCount CountTable::rank_total(unsigned r) const
{
    BigCount sum = 0;
    for (std::uint32_t t = 0; t < ctx_.q(); ++t) {
        sum += cell(r, {t});
    }
    return sum;
}

bool CountTable::nonzero_uniform(unsigned r) const
{
    for (std::uint32_t t = 2; t < ctx_.q(); ++t) {
        if (cell(r, {t}) != cell(r, {1})) {
            return false;
        }
    }
    return true;
}

const BigCount& CountTable::class_cell(unsigned r, TraceClass c) const
{
    return cell(r, c == TraceClass::Zero ? FieldCtx::zero() : FieldCtx::one());
}

std::uint64_t enumeration_size(unsigned n, std::uint32_t q)
{
    std::uint64_t total = 1;
    for (unsigned i = 0; i < n * n; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / q) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= q;
    }
    return total;
}

void check_enumeration_size(unsigned n, std::uint32_t q)
{
    if (enumeration_size(n, q) > kMaxEnumeration) {
        throw TooLarge("size guard exceeded: " + std::to_string(q) + "^(" + std::to_string(n) +
                       "^2) matrices is more than 2^28; use the closed-form path instead");
    }
}

namespace {

using Tally = std::vector<std::uint64_t>;

void check_k(unsigned n, unsigned k)
{
    if (k > n) {
        throw KOutOfRange("k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
}

CountTable to_table(const Tally& tally, unsigned n, unsigned k, const FieldCtx& ctx)
{
    CountTable out(ctx, n, k);
    for (unsigned r = 0; r <= n; ++r) {
        for (std::uint32_t t = 0; t < ctx.q(); ++t) {
            const std::uint64_t c = tally[std::size_t{r} * ctx.q() + t];
            if (c != 0) {
                out.add(r, {t}, BigCount(static_cast<unsigned long>(c)));
            }
        }
    }
    return out;
}

// Tallies every matrix whose first row has index in [lo, hi). The first row
// index reads the row as base-q digits with its last entry least significant.
Tally tally_first_rows(unsigned n, unsigned k, const FieldCtx& ctx, std::uint64_t lo, std::uint64_t hi)
{
    const std::uint32_t q = ctx.q();
    const std::size_t cells = std::size_t{n} * n;
    Tally tally(std::size_t{n + 1} * q, 0);
    std::vector<FieldElem> x(cells);
    std::vector<FieldElem> scratch(cells);
    std::uint64_t rows = 1;
    for (unsigned i = 0; i < n; ++i) {
        rows *= q;
    }
    const std::uint64_t tail = enumeration_size(n, q) / rows;
    for (std::uint64_t row = lo; row < hi; ++row) {
        std::uint64_t digits = row;
        for (std::size_t j = n; j-- > 0;) {
            x[j] = {static_cast<std::uint32_t>(digits % q)};
            digits /= q;
        }
        std::fill(x.begin() + n, x.end(), FieldElem{});
        for (std::uint64_t it = 0; it < tail; ++it) {
            FieldElem t = FieldCtx::zero();
            for (unsigned i = 0; i < k; ++i) {
                t = ctx.add(t, x[std::size_t{i} * n + i]);
            }
            std::copy(x.begin(), x.end(), scratch.begin());
            const std::size_t r = rank_in_place(scratch, n, n, ctx);
            ++tally[r * q + t.index];
            for (std::size_t pos = cells; pos-- > n;) {
                if (++x[pos].index < q) {
                    break;
                }
                x[pos].index = 0;
            }
        }
    }
    return tally;
}

} // namespace

CountTable enumerate_counts(unsigned n, unsigned k, const FieldCtx& ctx)
{
    check_k(n, k);
    check_enumeration_size(n, ctx.q());
    const std::uint32_t q = ctx.q();
    const std::size_t cells = std::size_t{n} * n;
    const std::uint64_t total = enumeration_size(n, q);

    Tally tally(std::size_t{n + 1} * q, 0);
    std::vector<FieldElem> x(cells);
    std::vector<FieldElem> scratch(cells);
    for (std::uint64_t it = 0; it < total; ++it) {
        FieldElem t = FieldCtx::zero();
        for (unsigned i = 0; i < k; ++i) {
            t = ctx.add(t, x[std::size_t{i} * n + i]);
        }
        std::copy(x.begin(), x.end(), scratch.begin());
        const std::size_t r = rank_in_place(scratch, n, n, ctx);
        ++tally[r * q + t.index];
        for (std::size_t pos = cells; pos-- > 0;) {
            if (++x[pos].index < q) {
                break;
            }
            x[pos].index = 0;
        }
    }
    return to_table(tally, n, k, ctx);
}

CountTable partitioned_enumerate(unsigned n, unsigned k, const FieldCtx& ctx, unsigned workers)
{
    check_k(n, k);
    check_enumeration_size(n, ctx.q());
    if (workers < 1) {
        throw InvalidArgument("worker count must be at least 1");
    }
    if (n == 0) {
        return enumerate_counts(n, k, ctx);
    }
    std::uint64_t rows = 1;
    for (unsigned i = 0; i < n; ++i) {
        rows *= ctx.q();
    }
    std::vector<Tally> partial(workers);
    const auto w_count = static_cast<long>(workers);
#pragma omp parallel for num_threads(workers) schedule(static, 1)
    for (long w = 0; w < w_count; ++w) {
        const std::uint64_t lo = rows * static_cast<std::uint64_t>(w) / workers;
        const std::uint64_t hi = rows * static_cast<std::uint64_t>(w + 1) / workers;
        partial[static_cast<std::size_t>(w)] = tally_first_rows(n, k, ctx, lo, hi);
    }
    Tally merged(partial.front().size(), 0);
    for (const auto& p : partial) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            merged[i] += p[i];
        }
    }
    return to_table(merged, n, k, ctx);
}

CountTable trace_form_table(const MatGF& a)
{
    if (!a.is_square()) {
        throw DimensionMismatch("trace form needs a square matrix");
    }
    const auto n = static_cast<unsigned>(a.rows());
    const FieldCtx& ctx = a.ctx();
    check_enumeration_size(n, ctx.q());
    const std::uint32_t q = ctx.q();
    const std::size_t cells = std::size_t{n} * n;
    const std::uint64_t total = enumeration_size(n, q);

    Tally tally(std::size_t{n + 1} * q, 0);
    std::vector<FieldElem> x(cells);
    std::vector<FieldElem> scratch(cells);
    for (std::uint64_t it = 0; it < total; ++it) {
        // tr(A X) = sum_{i,j} A_ij X_ji
        FieldElem t = FieldCtx::zero();
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) {
                t = ctx.add(t, ctx.mul(a.at(i, j), x[std::size_t{j} * n + i]));
            }
        }
        std::copy(x.begin(), x.end(), scratch.begin());
        const std::size_t r = rank_in_place(scratch, n, n, ctx);
        ++tally[r * q + t.index];
        for (std::size_t pos = cells; pos-- > 0;) {
            if (++x[pos].index < q) {
                break;
            }
            x[pos].index = 0;
        }
    }
    return to_table(tally, n, static_cast<unsigned>(mat_rank(a)), ctx);
}

BigCount trace_form_oracle(const MatGF& a, unsigned r, FieldElem alpha)
{
    if (!a.ctx().contains(alpha)) {
        throw InvalidArgument("alpha is not an element of the matrix field");
    }
    if (r > a.rows()) {
        return 0;
    }
    return trace_form_table(a).cell(r, alpha);
}

} // namespace qcount
