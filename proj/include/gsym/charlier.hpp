#pragma once

#include "gsym/rational.hpp"
#include "gsym/tabloid.hpp"
#include "gsym/wreath.hpp"

#include <utility>
#include <vector>

namespace gsym {

/// C_k^(a)(x) = sum_j (-1)^(k-j) binom(k,j) a^(-j) (x)_j, exact.
Rational charlier(int k, const Rational& a, const Integer& x);

/// w_0..w_n: number of elements of C_r wr S_n with theta = i.
std::vector<Integer> fixed_point_counts(int n, int r);

/// sum_i w_i C_k(i) C_l(i) = 0 for all k != l with k + l <= n.
bool charlier_orthogonality_check(int n, int r);

Integer stirling2(int k, int i);

/// k-th moment of the Poisson distribution: sum_{i=1..k} mean^i S(k,i).
Rational poisson_moment(int k, const Rational& mean);

/// d(x, y) = n - theta(x^-1 y).
int distance(const WreathElement& x, const WreathElement& y);

struct DistanceDistribution {
    int n = 0;
    int r = 1;
    Integer subset_size;
    std::vector<Rational> A;      // A_0..A_n
    std::vector<Rational> Adual;  // A'_0..A'_n
};

/// A'_k computed both as the Charlier transform of A and as the pair sum of
/// C_k(theta(x^-1 y)); the two routes must agree exactly.
DistanceDistribution distance_distribution(const std::vector<WreathElement>& Y, int n, int r);

struct TDesignVerdict {
    bool is_design = false;
    bool dual_zeros = false;                 // A'_1..A'_t all vanish
    bool conclusive_from_distances = false;  // t <= n/2, so the zeros decide
};

/// Necessary dual-distance test, conclusive for t <= n/2; beyond that the
/// verdict defers to the character-theoretic design test.
TDesignVerdict t_design_test(const std::vector<WreathElement>& Y, int t, int n, int r);

/// (r^t (n)_t, r^(n-d+1) (n)_(n-d+1)); equality in either forces d = n-t+1.
std::pair<Integer, Integer> design_code_bounds(int n, int r, int t, int d);

/// A_n, A_(n-1), ..., A_1 for a t-design that is an (n-t)-code, as exact
/// rationals; entry i of the result is A_(n-i), i = 0..n-1.
std::vector<Rational> predicted_distance_distribution(int n, int r, int t, const Integer& size);

/// Largest t such that Y is a t-design (0 if none).
int max_design_strength(const std::vector<WreathElement>& Y, int n, int r);

struct MinNonzeroDistance {
    int d = 0;
    bool no_pairs = false;  // singleton convention: d = n+1, flagged
};

MinNonzeroDistance min_nonzero_distance(const std::vector<WreathElement>& Y, int n, int r);

} // namespace gsym
