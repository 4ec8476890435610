#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qcount {

/// Arbitrary-precision integer backed by GMP.
using BigInt = mpz_class;

/// A cardinality. Never negative.
using BigCount = mpz_class;

/// A signed count difference such as f0 - f1.
using SignedBig = mpz_class;

BigInt ipow(const BigInt& base, unsigned long exponent);
BigInt ipow(unsigned long base, unsigned long exponent);

/// Returns num / den, throwing DivisionInexact (tagged with `what`) on a
/// nonzero remainder or a zero divisor.
BigInt exact_div(const BigInt& num, const BigInt& den, std::string_view what);

std::string to_decimal(const BigInt& value);

/// Parses an optionally signed decimal string; throws ParseError.
BigInt parse_decimal(std::string_view text);

} // namespace qcount
