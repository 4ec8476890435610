#pragma once

#include "qcount/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace qcount {

/// Dense univariate polynomial in X with exact integer coefficients.
///
/// Coefficient i multiplies X^i. The stored sequence never ends in a zero,
/// so the zero polynomial has no coefficients and two polynomials are equal
/// exactly when their coefficient vectors are.
class PolyZ {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    PolyZ() = default;
    explicit PolyZ(std::vector<BigInt> coeffs);
    PolyZ(std::initializer_list<long> coeffs);

    static PolyZ constant(BigInt c);
    static PolyZ monomial(BigInt c, std::size_t degree);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] int degree() const;
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

    /// Coefficient of X^i; zero past the end.
    [[nodiscard]] BigInt coeff(std::size_t i) const;
    [[nodiscard]] std::span<const BigInt> coeffs() const { return coeffs_; }

    /// Evaluates at an integer point (Horner).
    [[nodiscard]] BigInt eval(const BigInt& x) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PolyZ& a, const PolyZ& b) = default;

    PolyZ& operator+=(const PolyZ& other);
    PolyZ& operator-=(const PolyZ& other);
    PolyZ& operator*=(const BigInt& scalar);

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

PolyZ operator+(PolyZ a, const PolyZ& b);
PolyZ operator-(PolyZ a, const PolyZ& b);
PolyZ operator-(PolyZ a);
PolyZ operator*(const PolyZ& a, const PolyZ& b);
PolyZ operator*(PolyZ a, const BigInt& scalar);
PolyZ operator*(const BigInt& scalar, PolyZ a);

/// Substitutes X -> c X, i.e. multiplies coefficient i by c^i.
PolyZ scale_arg(const PolyZ& a, const BigInt& c);

/// Multiplies by X^shift.
PolyZ shift_up(const PolyZ& a, std::size_t shift);

/// Quotient of an exact division over Z. Throws DivisionInexact if the
/// divisor is zero, a leading-coefficient step is not integral, or a
/// nonzero remainder is left.
PolyZ divide_exact(const PolyZ& num, const PolyZ& den);

} // namespace qcount
