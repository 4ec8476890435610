#include "qcount/gfq.hpp"

#include "qcount/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qcount {

namespace {

using Coeffs = std::vector<std::uint32_t>;

Coeffs to_digits(std::uint32_t index, std::uint32_t p, unsigned m)
{
    Coeffs out(m);
    for (unsigned i = 0; i < m; ++i) {
        out[i] = index % p;
        index /= p;
    }
    return out;
}

std::uint32_t from_digits(std::span<const std::uint32_t> digits, std::uint32_t p)
{
    std::uint32_t index = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        index = index * p + digits[i];
    }
    return index;
}

// Remainder of a modulo a monic divisor, coefficients mod p.
Coeffs poly_rem(Coeffs a, std::span<const std::uint32_t> monic, std::uint32_t p)
{
    const std::size_t d = monic.size() - 1;
    for (std::size_t top = a.size(); top-- > d;) {
        const std::uint64_t c = a[top];
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= d; ++j) {
            const std::size_t pos = top - d + j;
            a[pos] = static_cast<std::uint32_t>((a[pos] + (p - c) * monic[j]) % p);
        }
    }
    a.resize(std::min(a.size(), d));
    return a;
}

std::uint64_t checked_order(std::uint32_t p, unsigned m)
{
    if (!is_prime(p)) {
        throw NotPrime(std::to_string(p) + " is not prime");
    }
    if (m < 1) {
        throw InvalidArgument("field degree must be at least 1");
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > FieldCtx::kMaxOrder) {
            throw DegreeTooLarge("GF(" + std::to_string(p) + "^" + std::to_string(m) +
                                 ") exceeds the field size bound 2^20");
        }
    }
    return q;
}

class SlowField {
public:
    SlowField(std::uint32_t p, unsigned m, std::span<const std::uint32_t> modulus)
        : p_(p), m_(m), modulus_(modulus.begin(), modulus.end())
    {
        if (p_ == 2) {
            for (unsigned i = 0; i < m_; ++i) {
                low_bits_ |= modulus_[i] << i;
            }
        }
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
    {
        if (p_ == 2) {
            // carry-less multiply with reduction by the modulus
            std::uint32_t acc = 0;
            const std::uint32_t top = std::uint32_t{1} << (m_ - 1);
            for (unsigned i = m_; i-- > 0;) {
                const bool carry = (acc & top) != 0;
                acc = (acc << 1) & ((top << 1) - 1);
                if (carry) {
                    acc ^= low_bits_;
                }
                if ((b >> i) & 1U) {
                    acc ^= a;
                }
            }
            return acc;
        }
        const Coeffs da = to_digits(a, p_, m_);
        const Coeffs db = to_digits(b, p_, m_);
        Coeffs prod(2 * m_ - 1, 0);
        for (unsigned i = 0; i < m_; ++i) {
            for (unsigned j = 0; j < m_; ++j) {
                prod[i + j] = static_cast<std::uint32_t>(
                    (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
            }
        }
        Coeffs rem = poly_rem(std::move(prod), modulus_, p_);
        rem.resize(m_, 0);
        return from_digits(rem, p_);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const
    {
        std::uint32_t result = 1;
        while (e > 0) {
            if (e & 1U) {
                result = mul(result, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

private:
    std::uint32_t p_;
    unsigned m_;
    Coeffs modulus_;
    std::uint32_t low_bits_ = 0;
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::shared_ptr<const detail::FieldTables> build_tables(std::uint32_t p, Coeffs modulus)
{
    auto t = std::make_shared<detail::FieldTables>();
    t->p = p;
    t->m = static_cast<unsigned>(modulus.size() - 1);
    t->q = static_cast<std::uint32_t>(checked_order(p, t->m));
    t->modulus = std::move(modulus);
    const std::uint32_t q = t->q;

    SlowField slow(p, t->m, t->modulus);
    const auto factors = prime_factors(q - 1);
    t->generator = 1;
    for (std::uint32_t g = 1; g < q; ++g) {
        const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t l) {
            return slow.pow(g, (q - 1) / l) != 1;
        });
        if (primitive) {
            t->generator = g;
            break;
        }
    }

    t->exp.resize(2 * std::size_t{q - 1});
    t->log.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        t->exp[i] = x;
        t->exp[i + q - 1] = x;
        t->log[x] = i;
        x = slow.mul(x, t->generator);
    }

    t->neg.resize(q);
    t->inv.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
        Coeffs d = to_digits(a, p, t->m);
        for (auto& c : d) {
            c = (p - c) % p;
        }
        t->neg[a] = from_digits(d, p);
        if (a != 0) {
            t->inv[a] = t->exp[(q - 1 - t->log[a]) % (q - 1)];
        }
    }

    if (q <= FieldCtx::kTableOrder) {
        t->add_table.resize(std::size_t{q} * q);
        t->mul_table.resize(std::size_t{q} * q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                t->add_table[std::size_t{a} * q + b] = t->add_digits(a, b);
                t->mul_table[std::size_t{a} * q + b] =
                    (a == 0 || b == 0) ? 0 : t->exp[t->log[a] + t->log[b]];
            }
        }
    }
    return t;
}

} // namespace

std::uint32_t detail::FieldTables::add_digits(std::uint32_t a, std::uint32_t b) const
{
    if (p == 2) {
        return a ^ b;
    }
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (unsigned i = 0; i < m; ++i) {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return out;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic)
{
    if (monic.size() < 2 || monic.back() != 1) {
        throw InvalidArgument("modulus must be monic of degree >= 1");
    }
    const std::size_t deg = monic.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) {
            count *= p;
        }
        for (std::uint64_t low = 0; low < count; ++low) {
            Coeffs divisor = to_digits(static_cast<std::uint32_t>(low), p, static_cast<unsigned>(d));
            divisor.push_back(1);
            Coeffs rem = poly_rem(Coeffs(monic.begin(), monic.end()), divisor, p);
            if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; })) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned m)
{
    const auto count = static_cast<std::uint32_t>(checked_order(p, m));
    for (std::uint32_t low = 0; low < count; ++low) {
        Coeffs candidate = to_digits(low, p, m);
        candidate.push_back(1);
        if (is_irreducible(p, candidate)) {
            return candidate;
        }
    }
    throw Error("no irreducible polynomial found"); // unreachable: one exists for every degree
}

FieldCtx::FieldCtx(std::uint32_t p, unsigned m) : t_(build_tables(p, least_irreducible(p, m))) {}

FieldCtx::FieldCtx(std::uint32_t p, std::vector<std::uint32_t> modulus)
{
    if (!is_prime(p)) {
        throw NotPrime(std::to_string(p) + " is not prime");
    }
    if (std::any_of(modulus.begin(), modulus.end(), [p](std::uint32_t c) { return c >= p; })) {
        throw InvalidArgument("modulus coefficients must lie in [0, p)");
    }
    if (!is_irreducible(p, modulus)) {
        throw NotIrreducible("modulus is reducible over GF(" + std::to_string(p) + ")");
    }
    t_ = build_tables(p, std::move(modulus));
}

FieldElem FieldCtx::elem(std::uint32_t index) const
{
    if (index >= t_->q) {
        throw InvalidArgument("element index " + std::to_string(index) + " out of range for GF(" +
                              std::to_string(t_->q) + ")");
    }
    return {index};
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElem x) const { return to_digits(x.index, t_->p, t_->m); }

FieldElem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const
{
    if (coeffs.size() != t_->m ||
        std::any_of(coeffs.begin(), coeffs.end(), [this](std::uint32_t c) { return c >= t_->p; })) {
        throw InvalidArgument("coefficient vector does not describe an element of this field");
    }
    return {from_digits(coeffs, t_->p)};
}

FieldElem FieldCtx::inv(FieldElem a) const
{
    if (a.index == 0) {
        throw DivisionByZero("inverse of zero");
    }
    return {t_->inv[a.index]};
}

std::vector<FieldElem> FieldCtx::elements() const
{
    std::vector<FieldElem> out(t_->q);
    for (std::uint32_t i = 0; i < t_->q; ++i) {
        out[i] = {i};
    }
    return out;
}

namespace {

std::string format_poly(std::span<const std::uint32_t> c, char var)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) {
            continue;
        }
        if (!first) {
            os << '+';
        }
        first = false;
        if (i == 0 || c[i] != 1) {
            os << c[i];
        }
        if (i >= 1) {
            os << var;
        }
        if (i >= 2) {
            os << '^' << i;
        }
    }
    return first ? "0" : os.str();
}

} // namespace

std::string FieldCtx::format(FieldElem x) const { return format_poly(coeffs(x), 't'); }

std::string FieldCtx::modulus_string() const
{
    // highest degree first reads more naturally for a modulus
    std::ostringstream os;
    const auto& mod = t_->modulus;
    bool first = true;
    for (std::size_t i = mod.size(); i-- > 0;) {
        if (mod[i] == 0) {
            continue;
        }
        if (!first) {
            os << '+';
        }
        first = false;
        if (i == 0 || mod[i] != 1) {
            os << mod[i];
        }
        if (i >= 1) {
            os << 't';
        }
        if (i >= 2) {
            os << '^' << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// MatGF

MatGF::MatGF(FieldCtx ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols)
{
}

MatGF::MatGF(FieldCtx ctx, std::size_t rows, std::size_t cols, std::vector<FieldElem> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows_ * cols_) {
        throw DimensionMismatch("expected " + std::to_string(rows_ * cols_) + " entries, got " +
                                std::to_string(data_.size()));
    }
    for (FieldElem x : data_) {
        if (!ctx_.contains(x)) {
            throw InvalidArgument("matrix entry " + std::to_string(x.index) +
                                  " is not an element of GF(" + std::to_string(ctx_.q()) + ")");
        }
    }
}

MatGF MatGF::identity(FieldCtx ctx, std::size_t n)
{
    MatGF out(std::move(ctx), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.data_[i * n + i] = FieldCtx::one();
    }
    return out;
}

void MatGF::set(std::size_t i, std::size_t j, FieldElem x)
{
    if (!ctx_.contains(x)) {
        throw InvalidArgument("entry is not an element of the matrix field");
    }
    data_.at(i * cols_ + j) = x;
}

bool MatGF::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](FieldElem x) { return x.index == 0; });
}

MatGF operator*(const MatGF& a, const MatGF& b)
{
    if (a.cols() != b.rows() || !(a.ctx() == b.ctx())) {
        throw DimensionMismatch("incompatible matrix product");
    }
    const FieldCtx& f = a.ctx();
    std::vector<FieldElem> out(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const FieldElem ail = a.at(i, l);
            if (ail.index == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                auto& cell = out[i * b.cols() + j];
                cell = f.add(cell, f.mul(ail, b.at(l, j)));
            }
        }
    }
    return MatGF(f, a.rows(), b.cols(), std::move(out));
}

std::size_t rank_in_place(std::span<FieldElem> a, std::size_t rows, std::size_t cols,
                          const FieldCtx& ctx)
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c].index == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != rank) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols + c),
                             a.begin() + static_cast<std::ptrdiff_t>(pivot * cols + cols),
                             a.begin() + static_cast<std::ptrdiff_t>(rank * cols + c));
        }
        const FieldElem pivot_inv = ctx.inv(a[rank * cols + c]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const FieldElem lead = a[i * cols + c];
            if (lead.index == 0) {
                continue;
            }
            const FieldElem factor = ctx.neg(ctx.mul(lead, pivot_inv));
            for (std::size_t j = c; j < cols; ++j) {
                a[i * cols + j] = ctx.add(a[i * cols + j], ctx.mul(factor, a[rank * cols + j]));
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t mat_rank(const MatGF& m)
{
    std::vector<FieldElem> scratch(m.entries().begin(), m.entries().end());
    return rank_in_place(scratch, m.rows(), m.cols(), m.ctx());
}

FieldElem k_trace(const MatGF& m, std::size_t k)
{
    if (!m.is_square()) {
        throw DimensionMismatch("k-trace needs a square matrix");
    }
    if (k > m.rows()) {
        throw KOutOfRange("k = " + std::to_string(k) + " exceeds n = " + std::to_string(m.rows()));
    }
    FieldElem acc = FieldCtx::zero();
    for (std::size_t i = 0; i < k; ++i) {
        acc = m.ctx().add(acc, m.at(i, i));
    }
    return acc;
}

FieldElem trace(const MatGF& m) { return k_trace(m, m.rows()); }

std::optional<MatGF> mat_inverse(const MatGF& m)
{
    if (!m.is_square()) {
        throw DimensionMismatch("inverse needs a square matrix");
    }
    const FieldCtx& f = m.ctx();
    const std::size_t n = m.rows();
    const std::size_t w = 2 * n;
    std::vector<FieldElem> a(n * w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i * w + j] = m.at(i, j);
        }
        a[i * w + n + i] = FieldCtx::one();
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot * w + c].index == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        for (std::size_t j = 0; j < w; ++j) {
            std::swap(a[pivot * w + j], a[c * w + j]);
        }
        const FieldElem s = f.inv(a[c * w + c]);
        for (std::size_t j = 0; j < w; ++j) {
            a[c * w + j] = f.mul(a[c * w + j], s);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const FieldElem lead = a[i * w + c];
            if (i == c || lead.index == 0) {
                continue;
            }
            for (std::size_t j = 0; j < w; ++j) {
                a[i * w + j] = f.sub(a[i * w + j], f.mul(lead, a[c * w + j]));
            }
        }
    }
    std::vector<FieldElem> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        std::copy_n(a.begin() + static_cast<std::ptrdiff_t>(i * w + n), n,
                    out.begin() + static_cast<std::ptrdiff_t>(i * n));
    }
    return MatGF(f, n, n, std::move(out));
}

MatGF canonical_rank_matrix(std::size_t n, std::size_t k, const FieldCtx& ctx)
{
    if (k > n) {
        throw KOutOfRange("rank " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
    MatGF out(ctx, n, n);
    for (std::size_t i = 0; i < k; ++i) {
        out.set(i, i, FieldCtx::one());
    }
    return out;
}

MatGF random_matrix(std::size_t rows, std::size_t cols, const FieldCtx& ctx, Rng& rng)
{
    std::uniform_int_distribution<std::uint32_t> pick(0, ctx.q() - 1);
    std::vector<FieldElem> entries(rows * cols);
    for (auto& x : entries) {
        x = {pick(rng)};
    }
    return MatGF(ctx, rows, cols, std::move(entries));
}

MatGF random_invertible(std::size_t n, const FieldCtx& ctx, Rng& rng)
{
    for (int draw = 0; draw < kMaxInvertibleDraws; ++draw) {
        MatGF g = random_matrix(n, n, ctx, rng);
        if (mat_rank(g) == n) {
            return g;
        }
    }
    throw RngExhausted("no invertible matrix after " + std::to_string(kMaxInvertibleDraws) +
                       " draws");
}

MatGF random_rank_k(std::size_t n, std::size_t k, const FieldCtx& ctx, Rng& rng)
{
    const MatGF b = canonical_rank_matrix(n, k, ctx);
    if (k == 0) {
        return b;
    }
    const MatGF g1 = random_invertible(n, ctx, rng);
    const MatGF g2 = random_invertible(n, ctx, rng);
    return *mat_inverse(g1) * b * g2;
}

} // namespace qcount
