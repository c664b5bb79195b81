#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace clh {

using Int = mpz_class;
using Rat = mpq_class;

/// num/den as a canonical rational; den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

Int pow_int(const Int& base, unsigned long e);

/// base^e for integer e (negative exponents allowed, base != 0).
Rat pow_rat(const Rat& base, long e);

/// p^-1 as an exact rational.
Rat inv_of(std::int64_t p);

/// Deterministic primality test for 64-bit inputs.
bool is_prime_i64(std::int64_t n);

double to_double(const Rat& v);

/// Certified upper bound for sum_{n>N} n^degree * x^n, exact in rational
/// arithmetic.  Requires 0 < x < 1 and x*((N+2)/(N+1))^degree < 1 so the
/// terms are eventually dominated by a geometric series; throws
/// std::domain_error otherwise.
Rat tail_poly_geometric(const Rat& x, unsigned degree, unsigned long n_from);

std::string to_string(const Rat& v);

}  // namespace clh
