#include "gsym/fields.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace gsym {

namespace {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Conway polynomials, ascending coefficients without the leading 1.
const std::map<int, std::pair<int, std::vector<int>>>& extension_table() {
    static const std::map<int, std::pair<int, std::vector<int>>> table{
        {4, {2, {1, 1}}},        // x^2 + x + 1
        {8, {2, {1, 1, 0}}},     // x^3 + x + 1
        {9, {3, {2, 2}}},        // x^2 + 2x + 2
        {16, {2, {1, 1, 0, 0}}}, // x^4 + x + 1
        {25, {5, {2, 4}}},       // x^2 + 4x + 2
        {27, {3, {1, 2, 0}}},    // x^3 + 2x + 1
    };
    return table;
}

} // namespace

bool FiniteField::supported(int q) {
    return (is_prime(q) && q <= 97) || extension_table().count(q) > 0;
}

FiniteField::FiniteField(int q) : q_(q) {
    if (is_prime(q) && q <= 97) {
        p_ = q;
        k_ = 1;
        modulus_ = {0, 1};  // unused for prime fields
        return;
    }
    auto it = extension_table().find(q);
    if (it == extension_table().end())
        throw std::invalid_argument("FiniteField: unsupported order " + std::to_string(q));
    p_ = it->second.first;
    k_ = static_cast<int>(it->second.second.size());
    modulus_ = it->second.second;
    modulus_.push_back(1);
}

std::vector<int> FiniteField::digits(int a) const {
    std::vector<int> out(k_, 0);
    for (int i = 0; i < k_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

int FiniteField::encode(const std::vector<int>& coeffs) const {
    int out = 0;
    for (int i = k_ - 1; i >= 0; --i) out = out * p_ + coeffs[i];
    return out;
}

int FiniteField::add(int a, int b) const {
    if (k_ == 1) return (a + b) % p_;
    auto da = digits(a);
    const auto db = digits(b);
    for (int i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return encode(da);
}

int FiniteField::neg(int a) const {
    if (k_ == 1) return (p_ - a) % p_;
    auto da = digits(a);
    for (int i = 0; i < k_; ++i) da[i] = (p_ - da[i]) % p_;
    return encode(da);
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul(int a, int b) const {
    if (k_ == 1) return static_cast<int>((static_cast<long long>(a) * b) % p_);
    const auto da = digits(a);
    const auto db = digits(b);
    std::vector<int> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // reduce modulo the monic modulus
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        const int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int j = 0; j < k_; ++j)
            prod[d - k_ + j] = ((prod[d - k_ + j] - c * modulus_[j]) % p_ + p_) % p_;
    }
    prod.resize(k_);
    return encode(prod);
}

int FiniteField::inv(int a) const {
    if (a == 0) throw std::invalid_argument("FiniteField::inv: zero has no inverse");
    for (int b = 1; b < q_; ++b)
        if (mul(a, b) == 1) return b;
    throw std::logic_error("FiniteField::inv: no inverse found");
}

} // namespace gsym
