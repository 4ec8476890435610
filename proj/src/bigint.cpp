#include "qcount/bigint.hpp"

#include "qcount/errors.hpp"

#include <cctype>

namespace qcount {

BigInt ipow(const BigInt& base, unsigned long exponent)
{
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

BigInt ipow(unsigned long base, unsigned long exponent)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    return out;
}

BigInt exact_div(const BigInt& num, const BigInt& den, std::string_view what)
{
    if (den == 0) {
        throw DivisionInexact(std::string(what) + ": division by zero");
    }
    BigInt quot;
    BigInt rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0) {
        throw DivisionInexact(std::string(what) + ": " + num.get_str() + " is not divisible by " +
                              den.get_str());
    }
    return quot;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_decimal(std::string_view text)
{
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) {
        throw ParseError("empty integer literal");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("not a decimal integer: '" + std::string(text) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

} // namespace qcount
