#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace entropic {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "p/q", and finite decimals such as "-0.125" or "1e-3".
// Decimals are converted exactly (0.1 becomes 1/10).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Exact binary value of a long double; every finite long double is a dyadic rational.
Rational exact_rational(long double value);

long double to_long_double(const Rational& value);
long double to_long_double(const Integer& value);

}  // namespace entropic
