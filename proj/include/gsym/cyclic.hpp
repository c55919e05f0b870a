#pragma once

#include "gsym/rational.hpp"

#include <vector>

namespace gsym {

/// The base group C_r; elements are residues 0..r-1.
struct GroupSpec {
    int r = 1;
    explicit GroupSpec(int order);
};

/// C_r has exactly one subgroup per divisor d of r, namely <r/d>.
struct SubgroupOfCr {
    int order = 1;
    bool operator==(const SubgroupOfCr&) const = default;
};

std::vector<SubgroupOfCr> subgroups(const GroupSpec& spec);

SubgroupOfCr annihilator(const SubgroupOfCr& U, const GroupSpec& spec);

/// Elements of U inside C_r, ascending.
std::vector<int> subgroup_elements(const SubgroupOfCr& U, const GroupSpec& spec);

bool subgroup_contains(const SubgroupOfCr& U, const GroupSpec& spec, int g);

std::vector<int> divisors_of(int n);
int euler_phi(int n);

/// Coefficients of Phi_r, ascending degree, monic.
std::vector<Integer> cyclotomic_polynomial(int r);

/// Element of Q(omega_r) in the power basis modulo Phi_r. The reduced
/// coefficient vector is canonical, so operator== decides value equality.
class Cyclotomic {
public:
    Cyclotomic() = default;

    static Cyclotomic zero(int r);
    static Cyclotomic one(int r);
    static Cyclotomic from_rational(int r, const Rational& value);
    static Cyclotomic from_coefficients(int r, std::vector<Rational> coeffs);

    /// omega_r^(e mod r)
    static Cyclotomic root_power(int r, long long e);

    int order() const { return r_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Cyclotomic operator+(const Cyclotomic& other) const;
    Cyclotomic operator-(const Cyclotomic& other) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& other) const;
    Cyclotomic& operator+=(const Cyclotomic& other);

    Cyclotomic operator*(const Rational& scalar) const;
    Cyclotomic operator*(const Integer& scalar) const;

    /// Galois conjugation omega -> omega^(-1); complex conjugation on values.
    Cyclotomic conj() const;

    bool is_zero() const;
    bool is_rational() const;

    /// Throws ConsistencyError unless the value lies in Q.
    Rational rational_part() const;

    bool operator==(const Cyclotomic& other) const;
    bool operator!=(const Cyclotomic& other) const { return !(*this == other); }
    bool operator<(const Cyclotomic& other) const;

private:
    Cyclotomic(int r, std::vector<Rational> coeffs) : r_(r), coeffs_(std::move(coeffs)) {}

    int r_ = 0;
    std::vector<Rational> coeffs_;
};

Cyclotomic root_power(const GroupSpec& spec, long long e);

} // namespace gsym
