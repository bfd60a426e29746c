#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "matchfab/errors.hpp"

namespace matchfab {

// Arbitrary-precision signed integer.  Matching counts and determinants
// overflow 64 bits quickly (4^g terms), so everything countable is a BigInt.
using BigInt = mpz_class;

// Exact rational in canonical reduced form, denominator > 0.
using Rational = mpq_class;

// mpz_class has no long long constructor; long is 64-bit on every platform
// this builds for.
inline BigInt big_of(long long v) { return BigInt(static_cast<long>(v)); }

// 2^e as an exact integer.
BigInt pow2(unsigned long e);

// 4^e as an exact integer.
BigInt pow4(unsigned long e);

// base^e for small bases.
BigInt pow_ui(const BigInt& base, unsigned long e);

// Exact integer square root; nullopt when v is not a perfect square.
std::optional<BigInt> exact_sqrt(const BigInt& v);

// If v = 2^e for some e >= 0, returns e.
std::optional<unsigned long> exact_log2(const BigInt& v);

// Base-2 logarithm as a double; exact when v is a power of two.
double log2_approx(const BigInt& v);

std::string to_decimal(const BigInt& v);
BigInt from_decimal(const std::string& s);

// Reduced rational from integer numerator/denominator.
Rational make_rational(const BigInt& num, const BigInt& den);

// "p/q" (or just "p" when q == 1).
std::string to_string(const Rational& r);

double to_double(const Rational& r);

// v mod m for a word-sized modulus, result in [0, m).
std::uint64_t mod_u64(const BigInt& v, std::uint64_t m);

} // namespace matchfab
