#pragma once

#include "qcount/qanalogs.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace qcount {

/// An element of GF(p^m), identified by its index in the canonical
/// enumeration: the coefficient vector (c_0, ..., c_{m-1}) in the basis
/// 1, t, ..., t^{m-1} maps to sum c_i p^i. Index 0 is zero, index 1 is one,
/// and index order is lexicographic with c_{m-1} most significant.
struct FieldElem {
    std::uint32_t index = 0;

    friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

namespace detail {

struct FieldTables {
    std::uint32_t p = 0;
    unsigned m = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus; // monic, low-to-high, size m + 1
    std::uint32_t generator = 0;        // index of a primitive element

    std::vector<std::uint32_t> add_table; // q*q, only for small q
    std::vector<std::uint32_t> mul_table; // q*q, only for small q
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> inv;
    std::vector<std::uint32_t> log; // log[0] unused
    std::vector<std::uint32_t> exp; // length 2(q-1)

    [[nodiscard]] std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;
};

} // namespace detail

/// The finite field GF(p^m) with a fixed monic irreducible modulus.
///
/// Immutable after construction; copies share the same tables and may be
/// used from any number of threads.
class FieldCtx {
public:
    /// Oracle practicality bound on q.
    static constexpr std::uint32_t kMaxOrder = std::uint32_t{1} << 20;
    /// Full q x q addition and multiplication tables are kept up to this q.
    static constexpr std::uint32_t kTableOrder = 256;

    /// GF(p^m) with the lexicographically least monic irreducible modulus.
    /// Throws NotPrime, DegreeTooLarge.
    FieldCtx(std::uint32_t p, unsigned m);

    /// GF(p^m) with a caller-chosen monic modulus of degree m, given
    /// low-to-high. Throws NotIrreducible if it factors.
    FieldCtx(std::uint32_t p, std::vector<std::uint32_t> modulus);

    [[nodiscard]] std::uint32_t p() const { return t_->p; }
    [[nodiscard]] unsigned m() const { return t_->m; }
    [[nodiscard]] std::uint32_t q() const { return t_->q; }
    [[nodiscard]] std::span<const std::uint32_t> modulus() const { return t_->modulus; }
    [[nodiscard]] QParam qparam() const { return QParam(t_->p, t_->m); }
    [[nodiscard]] FieldElem generator() const { return {t_->generator}; }

    [[nodiscard]] static constexpr FieldElem zero() { return {0}; }
    [[nodiscard]] static constexpr FieldElem one() { return {1}; }
    /// Throws InvalidArgument when index >= q.
    [[nodiscard]] FieldElem elem(std::uint32_t index) const;
    [[nodiscard]] bool contains(FieldElem x) const { return x.index < t_->q; }

    [[nodiscard]] std::vector<std::uint32_t> coeffs(FieldElem x) const;
    [[nodiscard]] FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;

    [[nodiscard]] FieldElem add(FieldElem a, FieldElem b) const
    {
        if (!t_->add_table.empty()) {
            return {t_->add_table[std::size_t{a.index} * t_->q + b.index]};
        }
        return {t_->add_digits(a.index, b.index)};
    }
    [[nodiscard]] FieldElem neg(FieldElem a) const { return {t_->neg[a.index]}; }
    [[nodiscard]] FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
    [[nodiscard]] FieldElem mul(FieldElem a, FieldElem b) const
    {
        if (!t_->mul_table.empty()) {
            return {t_->mul_table[std::size_t{a.index} * t_->q + b.index]};
        }
        if (a.index == 0 || b.index == 0) {
            return zero();
        }
        return {t_->exp[t_->log[a.index] + t_->log[b.index]]};
    }
    /// Throws DivisionByZero for a zero argument.
    [[nodiscard]] FieldElem inv(FieldElem a) const;
    [[nodiscard]] FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

    /// All q elements in canonical order.
    [[nodiscard]] std::vector<FieldElem> elements() const;

    /// Renders an element as a polynomial in t, e.g. "1+t" or "2t^2".
    [[nodiscard]] std::string format(FieldElem x) const;
    [[nodiscard]] std::string modulus_string() const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b)
    {
        return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
    }

private:
    std::shared_ptr<const detail::FieldTables> t_;
};

/// Least monic irreducible polynomial of degree m over GF(p), low-to-high.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned m);

/// Exhaustive check that a monic polynomial (low-to-high) over GF(p) has no
/// monic factor of degree 1..deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

/// Dense row-major matrix over a FieldCtx.
class MatGF {
public:
    /// Zero matrix.
    MatGF(FieldCtx ctx, std::size_t rows, std::size_t cols);
    /// Throws DimensionMismatch on a wrong entry count and InvalidArgument
    /// on an entry outside the field.
    MatGF(FieldCtx ctx, std::size_t rows, std::size_t cols, std::vector<FieldElem> entries);

    static MatGF identity(FieldCtx ctx, std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] const FieldCtx& ctx() const { return ctx_; }

    [[nodiscard]] FieldElem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, FieldElem x);

    [[nodiscard]] std::span<const FieldElem> entries() const { return data_; }
    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const MatGF& a, const MatGF& b)
    {
        return a.ctx_ == b.ctx_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    FieldCtx ctx_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElem> data_;
};

/// Throws DimensionMismatch unless a.cols() == b.rows() and the fields agree.
MatGF operator*(const MatGF& a, const MatGF& b);

/// Rank of a row-major rows x cols block, destroying its contents.
std::size_t rank_in_place(std::span<FieldElem> a, std::size_t rows, std::size_t cols,
                          const FieldCtx& ctx);

std::size_t mat_rank(const MatGF& m);

/// Sum of the first k diagonal entries. k = 0 gives zero.
/// Throws DimensionMismatch for a non-square matrix, KOutOfRange for k > n.
FieldElem k_trace(const MatGF& m, std::size_t k);
FieldElem trace(const MatGF& m);

/// Inverse by Gauss-Jordan; nullopt when singular.
std::optional<MatGF> mat_inverse(const MatGF& m);

/// diag(I_k, 0) of size n. Throws KOutOfRange for k > n.
MatGF canonical_rank_matrix(std::size_t n, std::size_t k, const FieldCtx& ctx);

using Rng = std::mt19937_64;

MatGF random_matrix(std::size_t rows, std::size_t cols, const FieldCtx& ctx, Rng& rng);

/// Uniform on GL(n, q) by rejection. Throws RngExhausted after
/// kMaxInvertibleDraws singular draws.
MatGF random_invertible(std::size_t n, const FieldCtx& ctx, Rng& rng);
inline constexpr int kMaxInvertibleDraws = 1000;

/// g1^{-1} diag(I_k, 0) g2 for independent uniform g1, g2; uniform on the
/// rank-k matrices.
MatGF random_rank_k(std::size_t n, std::size_t k, const FieldCtx& ctx, Rng& rng);

} // namespace qcount
