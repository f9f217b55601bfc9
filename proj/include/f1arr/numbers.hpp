#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace f1arr {

// Exact arithmetic types used throughout. GMP-backed, so repeated lattice
// intersections and polynomial coefficients never overflow. mpq_rational is
// always canonical: positive denominator, gcd(numerator, denominator) = 1.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Parses "7", "-3", "3/4", "-3/4". Throws Error(Input) on malformed tokens
// or a zero denominator.
Rational parse_rational(const std::string& token);

std::string to_decimal(const Int& value);
// "p/q", or plain "p" when the denominator is 1.
std::string to_decimal(const Rational& value);

Int binomial(std::size_t n, std::size_t k);
Int int_pow(Int base, std::size_t exp);

bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime >= n

}  // namespace f1arr
