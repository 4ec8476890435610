#include "qcount/qanalogs.hpp"

#include "qcount/errors.hpp"

#include <string>
#include <vector>

namespace qcount {

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

QParam::QParam(std::uint64_t p, unsigned m)
{
    if (p > kMaxPrime) {
        throw InvalidArgument("characteristic " + std::to_string(p) + " exceeds 2^32");
    }
    if (!is_prime(p)) {
        throw NotPrime(std::to_string(p) + " is not prime");
    }
    if (m < 1) {
        throw InvalidArgument("field degree must be at least 1");
    }
    p_ = p;
    m_ = m;
    q_ = ipow(static_cast<unsigned long>(p), m);
}

QParam QParam::from_order(const BigInt& q)
{
    if (q < 2) {
        throw InvalidArgument("q must be at least 2, got " + q.get_str());
    }
    QParam out;
    out.q_ = q;
    if (q < ipow(2UL, 40)) {
        auto value = static_cast<std::uint64_t>(q.get_ui());
        std::uint64_t p = value;
        for (std::uint64_t d = 2; d <= value / d; ++d) {
            if (value % d == 0) {
                p = d;
                break;
            }
        }
        unsigned m = 0;
        std::uint64_t rest = value;
        while (rest % p == 0) {
            rest /= p;
            ++m;
        }
        if (rest == 1) {
            out.p_ = p;
            out.m_ = m;
        }
    }
    return out;
}

std::optional<std::uint64_t> QParam::p() const
{
    return p_ != 0 ? std::optional<std::uint64_t>(p_) : std::nullopt;
}

std::optional<unsigned> QParam::m() const
{
    return p_ != 0 ? std::optional<unsigned>(m_) : std::nullopt;
}

BigInt binom2(unsigned m)
{
    BigInt v = m;
    return m < 2 ? BigInt(0) : BigInt(v * (m - 1) / 2);
}

BigCount gauss_binom(unsigned n, unsigned r, const QParam& q)
{
    if (r > n) {
        return 0;
    }
    BigInt num = 1;
    BigInt den = 1;
    for (unsigned i = 0; i < r; ++i) {
        num *= ipow(q.q(), n - i) - 1;
        den *= ipow(q.q(), r - i) - 1;
    }
    return exact_div(num, den, "gauss_binom");
}

PolyZ q_pochhammer_poly(unsigned n, const QParam& q)
{
    PolyZ out = PolyZ::constant(1);
    BigInt qi = 1;
    for (unsigned i = 0; i < n; ++i) {
        out = out * PolyZ(std::vector<BigInt>{BigInt(1), BigInt(-qi)});
        qi *= q.q();
    }
    return out;
}

PolyZ q_binomial_expand(unsigned n, const QParam& q)
{
    std::vector<BigInt> coeffs(n + 1);
    for (unsigned r = 0; r <= n; ++r) {
        BigInt term = gauss_binom(n, r, q) * ipow(q.q(), binom2(r).get_ui());
        coeffs[r] = (r % 2 == 0) ? term : BigInt(-term);
    }
    return PolyZ(std::move(coeffs));
}

BigCount gl_order(unsigned r, const QParam& q)
{
    BigInt out = 1;
    const BigInt qr = ipow(q.q(), r);
    BigInt qi = 1;
    for (unsigned i = 0; i < r; ++i) {
        out *= qr - qi;
        qi *= q.q();
    }
    return out;
}

BigCount rank_count(unsigned n, unsigned r, const QParam& q)
{
    if (r > n) {
        return 0;
    }
    BigInt gb = gauss_binom(n, r, q);
    return gb * gb * gl_order(r, q);
}

} // namespace qcount
