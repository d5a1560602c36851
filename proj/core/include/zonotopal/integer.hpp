#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace zonotopal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, defined for every integer n.
Integer binomial(const Integer& n, unsigned long k);

Integer factorial(unsigned long k);

/// gcd of all entries; zero for an all-zero or empty vector.
Integer contentOf(const std::vector<Integer>& v);

inline std::string toString(const Integer& z) { return z.get_str(); }

} // namespace zonotopal
