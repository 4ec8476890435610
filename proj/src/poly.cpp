#include "qcount/poly.hpp"

#include "qcount/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qcount {

PolyZ::PolyZ(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

PolyZ::PolyZ(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    normalize();
}

PolyZ PolyZ::constant(BigInt c) { return PolyZ(std::vector<BigInt>{std::move(c)}); }

PolyZ PolyZ::monomial(BigInt c, std::size_t degree)
{
    std::vector<BigInt> v(degree + 1);
    v[degree] = std::move(c);
    return PolyZ(std::move(v));
}

void PolyZ::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

int PolyZ::degree() const
{
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
}

BigInt PolyZ::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt PolyZ::eval(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

std::string PolyZ::to_string() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) {
            os << mag.get_str();
        }
        if (i >= 1) {
            os << 'X';
        }
        if (i >= 2) {
            os << '^' << i;
        }
    }
    return os.str();
}

PolyZ& PolyZ::operator+=(const PolyZ& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    normalize();
    return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    normalize();
    return *this;
}

PolyZ& PolyZ::operator*=(const BigInt& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    normalize();
    return *this;
}

PolyZ operator+(PolyZ a, const PolyZ& b) { return a += b; }
PolyZ operator-(PolyZ a, const PolyZ& b) { return a -= b; }
PolyZ operator-(PolyZ a) { return a *= BigInt(-1); }
PolyZ operator*(PolyZ a, const BigInt& scalar) { return a *= scalar; }
PolyZ operator*(const BigInt& scalar, PolyZ a) { return a *= scalar; }

PolyZ operator*(const PolyZ& a, const PolyZ& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    auto ac = a.coeffs();
    auto bc = b.coeffs();
    std::vector<BigInt> out(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < bc.size(); ++j) {
            out[i + j] += ac[i] * bc[j];
        }
    }
    return PolyZ(std::move(out));
}

PolyZ scale_arg(const PolyZ& a, const BigInt& c)
{
    std::vector<BigInt> out(a.coeffs().begin(), a.coeffs().end());
    BigInt power = 1;
    for (auto& coeff : out) {
        coeff *= power;
        power *= c;
    }
    return PolyZ(std::move(out));
}

PolyZ shift_up(const PolyZ& a, std::size_t shift)
{
    if (a.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(shift);
    out.insert(out.end(), a.coeffs().begin(), a.coeffs().end());
    return PolyZ(std::move(out));
}

PolyZ divide_exact(const PolyZ& num, const PolyZ& den)
{
    if (den.is_zero()) {
        throw DivisionInexact("polynomial division by zero");
    }
    std::vector<BigInt> rem(num.coeffs().begin(), num.coeffs().end());
    const std::size_t dsize = den.size();
    if (rem.size() < dsize) {
        if (!num.is_zero()) {
            throw DivisionInexact("polynomial division leaves remainder " + num.to_string());
        }
        return {};
    }
    const BigInt& lead = den.coeffs().back();
    std::vector<BigInt> quot(rem.size() - dsize + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const BigInt& top = rem[i + dsize - 1];
        if (top == 0) {
            continue;
        }
        BigInt c = exact_div(top, lead, "polynomial long division");
        for (std::size_t j = 0; j < dsize; ++j) {
            rem[i + j] -= c * den.coeffs()[j];
        }
        quot[i] = std::move(c);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
        throw DivisionInexact("polynomial division leaves remainder " + PolyZ(rem).to_string());
    }
    return PolyZ(std::move(quot));
}

} // namespace qcount
