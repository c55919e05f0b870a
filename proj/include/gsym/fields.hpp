#pragma once

#include <vector>

namespace gsym {

/// GF(q) for prime q <= 97 and q in {4, 8, 9, 16, 25, 27}. Elements are
/// integers 0..q-1 encoding polynomial coefficients base p; extension fields
/// use fixed Conway polynomials.
class FiniteField {
public:
    explicit FiniteField(int q);

    int q() const { return q_; }
    int characteristic() const { return p_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;  // a != 0

    static bool supported(int q);

private:
    int q_;
    int p_;
    int k_;
    std::vector<int> modulus_;  // ascending coefficients, monic, length k+1

    std::vector<int> digits(int a) const;
    int encode(const std::vector<int>& coeffs) const;
};

} // namespace gsym
