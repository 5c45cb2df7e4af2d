#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace binform {

// All certified computations run on exact arbitrary-precision rationals.
// Floating point is confined to the circle-map sampling in geometry.hpp.
using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }
inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }

inline double to_double(const Rat& q) { return q.get_d(); }

Int binomial(unsigned long n, unsigned long k);

/// a * (a-1) * ... * (a-b+1); b == 0 gives 1.
Int falling_factorial(unsigned long a, unsigned long b);

Rat rat_pow(const Rat& base, unsigned long e);

/// Canonical text form: "p" or "p/q" with q > 0.
std::string rat_to_string(const Rat& q);

/// Accepts optional sign, "p" or "p/q". Throws InputError on anything else.
Rat rat_from_string(const std::string& s);

/// Nearest rational with denominator 2^bits (ties round up).
/// Throws InputError on NaN/inf.
Rat dyadic_from_double(double x, unsigned bits);

}  // namespace binform
