#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gsym {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer factorial(int n);
Integer binomial(int n, int k);

/// (x)_j = x(x-1)...(x-j+1)
Integer falling_factorial(const Integer& x, int j);
Rational falling_factorial(const Rational& x, int j);

Integer integer_power(const Integer& base, int exp);

/// "3/4", "-3/4"; denominator 1 renders as a plain integer "5".
std::string rational_to_string(const Rational& value);

/// Accepts "p", "-p", "p/q", "-p/q" with q > 0.
Rational rational_from_string(const std::string& text);

} // namespace gsym
