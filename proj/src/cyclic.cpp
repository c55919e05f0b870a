#include "gsym/cyclic.hpp"

#include "gsym/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace gsym {

GroupSpec::GroupSpec(int order) : r(order) {
    if (order < 1) throw std::invalid_argument("GroupSpec: r must be positive");
}

std::vector<int> divisors_of(int n) {
    if (n < 1) throw std::invalid_argument("divisors_of: n must be positive");
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

int euler_phi(int n) {
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<SubgroupOfCr> subgroups(const GroupSpec& spec) {
    std::vector<SubgroupOfCr> out;
    for (int d : divisors_of(spec.r)) out.push_back(SubgroupOfCr{d});
    return out;
}

SubgroupOfCr annihilator(const SubgroupOfCr& U, const GroupSpec& spec) {
    if (spec.r % U.order != 0) throw std::invalid_argument("annihilator: order does not divide r");
    return SubgroupOfCr{spec.r / U.order};
}

std::vector<int> subgroup_elements(const SubgroupOfCr& U, const GroupSpec& spec) {
    if (spec.r % U.order != 0) throw std::invalid_argument("subgroup_elements: order does not divide r");
    const int step = spec.r / U.order;
    std::vector<int> out;
    out.reserve(U.order);
    for (int g = 0; g < spec.r; g += step) out.push_back(g);
    return out;
}

bool subgroup_contains(const SubgroupOfCr& U, const GroupSpec& spec, int g) {
    const int step = spec.r / U.order;
    return ((g % spec.r) + spec.r) % spec.r % step == 0;
}

namespace {

// Quotient of exact polynomial division by a monic divisor.
std::vector<Integer> divide_monic(const std::vector<Integer>& num, const std::vector<Integer>& den) {
    std::vector<Integer> rem = num;
    const int dn = static_cast<int>(den.size()) - 1;
    const int qn = static_cast<int>(num.size()) - 1 - dn;
    std::vector<Integer> quot(qn + 1, Integer(0));
    for (int k = qn; k >= 0; --k) {
        const Integer c = rem[k + dn];
        quot[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dn; ++j) rem[k + j] -= c * den[j];
    }
    for (const Integer& c : rem)
        if (c != 0) throw ConsistencyError("divide_monic: nonzero remainder");
    return quot;
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(int r) {
    if (r < 1) throw std::invalid_argument("cyclotomic_polynomial: r must be positive");
    // x^r - 1 divided by the product of Phi_d over proper divisors d of r.
    std::vector<Integer> poly(r + 1, Integer(0));
    poly[0] = -1;
    poly[r] = 1;
    for (int d : divisors_of(r)) {
        if (d == r) continue;
        poly = divide_monic(poly, cyclotomic_polynomial(d));
    }
    return poly;
}

namespace {

// Per-r reduction tables shared by every Cyclotomic of that order.
struct CycloContext {
    int r = 1;
    int degree = 1;                                  // phi(r)
    std::vector<Integer> modulus;                    // Phi_r, ascending, monic
    std::vector<std::vector<Integer>> power_table;   // x^k reduced, k = 0 .. max_power
    int max_power = 0;

    explicit CycloContext(int order) : r(order) {
        modulus = cyclotomic_polynomial(r);
        degree = static_cast<int>(modulus.size()) - 1;
        max_power = std::max(2 * degree - 2, r - 1);
        power_table.reserve(max_power + 1);
        std::vector<Integer> current(degree, Integer(0));
        current[0] = 1;
        power_table.push_back(current);
        for (int k = 1; k <= max_power; ++k) {
            // multiply by x, then fold the overflow via x^degree = -(lower part of Phi).
            Integer top = current.empty() ? Integer(0) : current[degree - 1];
            for (int j = degree - 1; j >= 1; --j) current[j] = current[j - 1];
            current[0] = 0;
            if (top != 0)
                for (int j = 0; j < degree; ++j) current[j] -= top * modulus[j];
            power_table.push_back(current);
        }
    }
};

const CycloContext& context_for(int r) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CycloContext>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(r);
    if (it == registry.end())
        it = registry.emplace(r, std::make_unique<CycloContext>(r)).first;
    return *it->second;
}

} // namespace

Cyclotomic Cyclotomic::zero(int r) {
    const auto& ctx = context_for(r);
    return Cyclotomic(r, std::vector<Rational>(ctx.degree, Rational(0)));
}

Cyclotomic Cyclotomic::one(int r) {
    return from_rational(r, Rational(1));
}

Cyclotomic Cyclotomic::from_rational(int r, const Rational& value) {
    Cyclotomic out = zero(r);
    out.coeffs_[0] = value;
    return out;
}

Cyclotomic Cyclotomic::from_coefficients(int r, std::vector<Rational> coeffs) {
    const auto& ctx = context_for(r);
    if (static_cast<int>(coeffs.size()) != ctx.degree)
        throw std::invalid_argument("Cyclotomic: coefficient vector must have length phi(r)");
    return Cyclotomic(r, std::move(coeffs));
}

Cyclotomic Cyclotomic::root_power(int r, long long e) {
    const auto& ctx = context_for(r);
    const int exp = static_cast<int>(((e % r) + r) % r);
    std::vector<Rational> coeffs(ctx.degree);
    for (int j = 0; j < ctx.degree; ++j) coeffs[j] = Rational(ctx.power_table[exp][j]);
    return Cyclotomic(r, std::move(coeffs));
}

Cyclotomic root_power(const GroupSpec& spec, long long e) {
    return Cyclotomic::root_power(spec.r, e);
}

namespace {
void require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order() != b.order())
        throw DimensionError("Cyclotomic: operands over different Q(omega_r)");
}
} // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& other) const {
    require_same_order(*this, other);
    std::vector<Rational> coeffs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs[i] = coeffs_[i] + other.coeffs_[i];
    return Cyclotomic(r_, std::move(coeffs));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
    require_same_order(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& other) const {
    require_same_order(*this, other);
    std::vector<Rational> coeffs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs[i] = coeffs_[i] - other.coeffs_[i];
    return Cyclotomic(r_, std::move(coeffs));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> coeffs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs[i] = -coeffs_[i];
    return Cyclotomic(r_, std::move(coeffs));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& other) const {
    require_same_order(*this, other);
    const auto& ctx = context_for(r_);
    const int deg = ctx.degree;
    std::vector<Rational> conv(2 * deg - 1, Rational(0));
    for (int i = 0; i < deg; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j < deg; ++j) {
            if (other.coeffs_[j] == 0) continue;
            conv[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    std::vector<Rational> out(deg, Rational(0));
    for (int k = 0; k < deg; ++k) out[k] = conv[k];
    for (int k = deg; k < 2 * deg - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& reduced = ctx.power_table[k];
        for (int j = 0; j < deg; ++j)
            if (reduced[j] != 0) out[j] += conv[k] * Rational(reduced[j]);
    }
    return Cyclotomic(r_, std::move(out));
}

Cyclotomic Cyclotomic::operator*(const Rational& scalar) const {
    std::vector<Rational> coeffs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs[i] = coeffs_[i] * scalar;
    return Cyclotomic(r_, std::move(coeffs));
}

Cyclotomic Cyclotomic::operator*(const Integer& scalar) const {
    return *this * Rational(scalar);
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic out = zero(r_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        out += root_power(r_, static_cast<long long>(r_) - static_cast<long long>(i)) * coeffs_[i];
    }
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const Rational& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational())
        throw ConsistencyError("Cyclotomic::rational_part: value is not rational");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

bool Cyclotomic::operator==(const Cyclotomic& other) const {
    return r_ == other.r_ && coeffs_ == other.coeffs_;
}

bool Cyclotomic::operator<(const Cyclotomic& other) const {
    if (r_ != other.r_) return r_ < other.r_;
    return coeffs_ < other.coeffs_;
}

} // namespace gsym
