#include "gsym/rational.hpp"

#include <stdexcept>

namespace gsym {

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

Integer falling_factorial(const Integer& x, int j) {
    Integer out = 1;
    for (int i = 0; i < j; ++i) out *= x - i;
    return out;
}

Rational falling_factorial(const Rational& x, int j) {
    Rational out = 1;
    for (int i = 0; i < j; ++i) out *= x - i;
    return out;
}

Integer integer_power(const Integer& base, int exp) {
    if (exp < 0) throw std::invalid_argument("integer_power: negative exponent");
    Integer out = 1;
    Integer b = base;
    int e = exp;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

std::string rational_to_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        const Integer num(text.substr(0, slash));
        const Integer den(text.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("rational_from_string: denominator must be positive");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("rational_from_string: cannot parse '" + text + "'");
    }
}

} // namespace gsym
