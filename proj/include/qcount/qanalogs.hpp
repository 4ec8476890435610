#pragma once

#include "qcount/bigint.hpp"
#include "qcount/poly.hpp"

#include <cstdint>
#include <optional>

namespace qcount {

bool is_prime(std::uint64_t n);

/// The order q of the field the counts refer to.
///
/// Built from (p, m) the value is a validated prime power. Built from a bare
/// order via from_order() any q >= 2 is accepted, since every closed form is
/// a polynomial in q. Only the prime-power form can be turned into a field.
class QParam {
public:
    /// Largest prime accepted by the (p, m) constructor; primality is checked
    /// by trial division.
    static constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 32;

    QParam(std::uint64_t p, unsigned m);

    /// Accepts any q >= 2. Prime-power structure is detected when q < 2^40.
    static QParam from_order(const BigInt& q);

    [[nodiscard]] const BigInt& q() const { return q_; }
    [[nodiscard]] bool is_prime_power() const { return p_ != 0; }
    /// Characteristic; nullopt if q is not a (detected) prime power.
    [[nodiscard]] std::optional<std::uint64_t> p() const;
    [[nodiscard]] std::optional<unsigned> m() const;

    friend bool operator==(const QParam& a, const QParam& b) { return a.q_ == b.q_; }

private:
    QParam() = default;

    BigInt q_;
    std::uint64_t p_ = 0;
    unsigned m_ = 0;
};

/// m(m-1)/2.
BigInt binom2(unsigned m);

/// Gaussian binomial coefficient: the number of r-dimensional subspaces of
/// an n-dimensional space over GF(q). Zero when r > n.
BigCount gauss_binom(unsigned n, unsigned r, const QParam& q);

/// Expanded (X;q)_n = (1 - X)(1 - qX)...(1 - q^{n-1}X).
PolyZ q_pochhammer_poly(unsigned n, const QParam& q);

/// The same polynomial assembled term by term from the q-binomial theorem:
/// sum_r [n r]_q (-1)^r q^{r(r-1)/2} X^r.
PolyZ q_binomial_expand(unsigned n, const QParam& q);

/// |GL(r, q)| = prod_{i<r} (q^r - q^i).
BigCount gl_order(unsigned r, const QParam& q);

/// Number of n x n matrices of rank r over GF(q): [n r]_q^2 |GL(r, q)|.
BigCount rank_count(unsigned n, unsigned r, const QParam& q);

} // namespace qcount
