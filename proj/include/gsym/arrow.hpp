#pragma once

#include "gsym/tabloid.hpp"
#include "gsym/wreath.hpp"

#include <vector>

namespace gsym {

/// Every mu in Lambda_n(C_r) arising from a colouring of sigma (each box of
/// sigma(U)'s diagram coloured with an element of the annihilator of U),
/// deduplicated, deterministic order.
std::vector<ClassIndex> colorings(const TransitivityType& sig, int r);

/// The relation sigma -> lambda: some colouring mu has mu(g) dominated by
/// lambda(g), with matching sizes, for every g.
bool arrow(const TransitivityType& sig, const ClassIndex& lam, int n, int r);

/// M_sigma = { lambda : sigma -> lambda }, in class enumeration order.
/// Memoised per (sigma, n, r).
const std::vector<ClassIndex>& m_set(const TransitivityType& sig, int n, int r);

/// sigma >= tau: M_sigma contains M_tau.
bool succeq(const TransitivityType& sig, const TransitivityType& tau, int n, int r);

/// Closed-form comparison for parabolic shapes (sigma, k) and (tau, l):
/// k <= l and sigma u (k) dominated by tau u (l).
bool parabolic_succeq(const Partition& sigma, int k, const Partition& tau, int ell);

struct NecessaryConditions {
    bool rho_dominated = false;       // rho dominated by pi
    bool sigma_conj_dominates = false;  // sigma' dominates tau'
    bool union_dominated = false;     // sigma u rho dominated by tau u pi
    bool all() const { return rho_dominated && sigma_conj_dominates && union_dominated; }
};

/// The three necessary conditions for (sigma,rho) >= (tau,pi).
NecessaryConditions necessary_conditions(const DoubleShape& a, const DoubleShape& b);

} // namespace gsym
