#pragma once

#include <gmpxx.h>

#include <string>

namespace polyexp {

using Integer = mpz_class;
// Always canonical: mpq_class arithmetic keeps gcd == 1 and a positive denominator.
using Rational = mpq_class;

Integer binomial(long n, long k);
Integer factorial(long n);

// 1 / base^exponent, exact.
Rational inverse_power(long base, int exponent);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

}  // namespace polyexp
