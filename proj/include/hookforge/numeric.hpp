#ifndef HOOKFORGE_NUMERIC_HPP
#define HOOKFORGE_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hookforge {

// All counting in the library is exact: big integers for counts and
// products, rationals where weight functions introduce non-integers.
using BigInt = mpz_class;
using BigRat = mpq_class;

BigInt factorial(unsigned n);

// q^k for integer k >= 0.
BigRat rat_pow(const BigRat& q, unsigned k);

// Decimal rendering. Rationals print as "p/q", or just "p" when the
// denominator is 1, so integers survive a round trip unchanged.
std::string to_string(const BigInt& z);
std::string to_string(const BigRat& q);

// Inverse of to_string(BigRat); accepts "p" and "p/q". Throws ParseError.
BigRat rat_from_string(const std::string& text);

} // namespace hookforge

#endif
