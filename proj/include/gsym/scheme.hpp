#pragma once

#include "gsym/tabloid.hpp"
#include "gsym/wreath.hpp"

#include <map>
#include <vector>

namespace gsym {

/// a_mu = (1/|Y|) #{(x,y) in Y^2 : cycle_type(x^-1 y) = mu}, sparse (absent = 0).
/// Y must be duplicate-free.
std::map<ClassIndex, Rational> inner_distribution(const std::vector<WreathElement>& Y, int n,
                                                  int r);

/// a'_lambda for a single label, computed from the inner distribution:
/// deg(chi^lambda) * sum_mu a_mu chi^lambda(mu). Must be a nonnegative
/// rational; anything else raises ConsistencyError.
Rational dual_value(const std::map<ClassIndex, Rational>& inner, const ClassIndex& lam, int n,
                    int r);

/// Dual distribution over every label, via the inner distribution.
std::map<ClassIndex, Rational> dual_distribution(const std::vector<WreathElement>& Y, int n,
                                                 int r);

/// Same values by the defining pair sum (deg/|Y|) sum_{x,y} chi(x^-1 y);
/// retained as the cross-check route.
std::map<ClassIndex, Rational> dual_distribution_pair_sum(const std::vector<WreathElement>& Y,
                                                          int n, int r);

/// Y is sigma-transitive iff a'_lambda = 0 for every lambda with
/// sigma -> lambda and lambda(0) != (n).
bool is_design(const std::vector<WreathElement>& Y, const TransitivityType& sig, int n, int r);

/// C(sigma): cycle types realised inside the stabiliser H_sigma, assembled as
/// unions over the rows (U_i, k_i) of Lambda_{k_i}(U_i).
std::vector<ClassIndex> clique_classes(const TransitivityType& sig, int n, int r);

/// Y is a sigma-clique iff a_mu = 0 for every mu in C(sigma) with
/// mu(0) != (1^n).
bool is_clique(const std::vector<WreathElement>& Y, const TransitivityType& sig, int n, int r);

struct BoundReport {
    Integer subset_size;
    Integer coset_count;       // |W| / |H_sigma|
    bool clique = false;
    bool design = false;
    bool clique_bound_holds = true;  // clique implies |Y| <= |W|/|H|
    bool design_bound_holds = true;  // design implies |Y| >= |W|/|H|
    bool equality = false;
    bool sharp = false;              // equality together with either property
};

BoundReport clique_design_bounds(const std::vector<WreathElement>& Y, const TransitivityType& sig,
                                 int n, int r);

} // namespace gsym
