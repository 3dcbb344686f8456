#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace padic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Valuation value; std::nullopt stands for +infinity (the valuation of zero).
using Valuation = std::optional<Rational>;

/// Exponent of p in a nonzero integer.
long vp_integer(const Integer& n, unsigned long p);

/// p-adic valuation of a rational; +infinity for zero.
Valuation vp(const Rational& x, unsigned long p);

/// Strips every factor of p from numerator and denominator.
Rational unit_part(const Rational& x, unsigned long p);

/// Exact rational square root if x is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

/// p^e for integer e (negative allowed).
Rational rational_pow(unsigned long p, long e);

/// Residue of a p-adic unit rational modulo p^k (denominator coprime to p).
Integer residue_mod(const Rational& unit, const Integer& modulus);

/// "n" or "n/d" in lowest terms.
std::string to_string(const Rational& x);

/// Parses "n" or "n/d" with optional sign; throws ParseError.
Rational parse_rational(const std::string& text);

bool is_prime(unsigned long n);

/// True when n has no square factor > 1.
bool is_squarefree(long n);

}  // namespace padic
