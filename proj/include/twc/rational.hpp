#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace twc {

/// Exact rationals in lowest terms with a positive denominator.
using Rational = mpq_class;
/// Arbitrary-precision integer used for counting quantities (g_λ, z_ρ, ...).
using Integer = mpz_class;

/// "a/b", or "a" when the denominator is one.
std::string to_string(const Rational &q);
std::string to_string(const Integer &z);

/// Parses "a", "-a" or "a/b"; throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// 2^e for any integer e.
Rational pow2(int e);

Integer factorial(int n);
/// n (n-1) ... (n-k+1); zero when k > n.
Integer falling_factorial(int n, int k);

/// Exact conversion; throws std::domain_error if q is not an integer.
Integer to_integer(const Rational &q);

}  // namespace twc
