#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsym/charlier.hpp"
#include "gsym/scheme.hpp"
#include "gsym/wreath_char.hpp"

#include <map>
#include <random>
#include <set>

using gsym::Integer;
using gsym::Rational;
using gsym::WreathElement;

TEST_CASE("charlier polynomial values") {
    for (int x = -3; x <= 5; ++x) {
        CHECK(gsym::charlier(0, Rational(1, 2), Integer(x)) == 1);
        CHECK(gsym::charlier(1, Rational(1, 2), Integer(x)) == Rational(2 * x - 1));
        // C_2^(a)(x) = a^-2 x^2 - (2a^-1 + a^-2) x + 1
        const Rational a(1, 3);
        const Rational expected = Rational(9 * x * x) - Rational(6 * x + 9 * x) + 1;
        CHECK(gsym::charlier(2, a, Integer(x)) == expected);
    }
}

TEST_CASE("fixed point counts") {
    const auto w22 = gsym::fixed_point_counts(2, 2);
    CHECK(w22 == std::vector<Integer>{5, 2, 1});

    for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 3; ++r) {
            const auto w = gsym::fixed_point_counts(n, r);
            CHECK(w[n] == 1);
            std::vector<Integer> counted(n + 1, Integer(0));
            for (const auto& g : gsym::all_elements(n, r)) counted[gsym::theta(g)] += 1;
            CHECK(w == counted);
            Integer total = 0;
            for (const auto& wi : w) total += wi;
            CHECK(total == gsym::group_order(n, r));
        }
    }
}

TEST_CASE("charlier orthogonality under the fixed point measure") {
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= 3; ++r) CHECK(gsym::charlier_orthogonality_check(n, r));

    // mean of C_1: sum_i w_i (r i - 1) = 0
    for (int n = 1; n <= 5; ++n) {
        const int r = 2;
        const auto w = gsym::fixed_point_counts(n, r);
        Rational sum = 0;
        for (int i = 0; i <= n; ++i) sum += Rational(w[i]) * Rational(r * i - 1);
        CHECK(sum == 0);
    }

    // diagonal terms are strictly positive
    const auto w = gsym::fixed_point_counts(4, 2);
    for (int k = 0; k <= 2; ++k) {
        Rational sum = 0;
        for (int i = 0; i <= 4; ++i) {
            const Rational c = gsym::charlier(k, Rational(1, 2), Integer(i));
            sum += Rational(w[i]) * c * c;
        }
        CHECK(sum > 0);
    }
}

TEST_CASE("stirling numbers and poisson moments") {
    CHECK(gsym::stirling2(3, 2) == 3);
    CHECK(gsym::stirling2(4, 2) == 7);
    CHECK(gsym::stirling2(0, 0) == 1);
    CHECK(gsym::poisson_moment(1, Rational(1, 5)) == Rational(1, 5));

    // empirical moments coincide with Poisson moments for k <= n
    for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 3; ++r) {
            const auto w = gsym::fixed_point_counts(n, r);
            for (int k = 0; k <= n; ++k) {
                Rational empirical = 0;
                for (int i = 0; i <= n; ++i)
                    empirical += Rational(w[i]) * Rational(gsym::integer_power(Integer(i), k));
                empirical /= Rational(gsym::group_order(n, r));
                CHECK(empirical == gsym::poisson_moment(k, Rational(1, r)));
            }
        }
    }
}

TEST_CASE("distance is a left-invariant metric") {
    const auto all = gsym::all_elements(2, 2);
    for (const auto& x : all) {
        CHECK(gsym::distance(x, x) == 0);
        for (const auto& y : all) {
            CHECK(gsym::distance(x, y) == gsym::distance(y, x));
            for (const auto& z : all) {
                CHECK(gsym::distance(x, z) <= gsym::distance(x, y) + gsym::distance(y, z));
                CHECK(gsym::distance(gsym::multiply(z, x), gsym::multiply(z, y)) ==
                      gsym::distance(x, y));
            }
        }
    }
}

TEST_CASE("distance distribution") {
    const int n = 3, r = 2;
    const auto single = gsym::distance_distribution({gsym::identity_element(n, r)}, n, r);
    CHECK(single.A[0] == 1);
    for (int i = 1; i <= n; ++i) CHECK(single.A[i] == 0);
    for (int k = 0; k <= n; ++k)
        CHECK(single.Adual[k] == gsym::charlier(k, Rational(1, r), Integer(n)));

    const auto whole = gsym::distance_distribution(gsym::all_elements(n, r), n, r);
    const auto w = gsym::fixed_point_counts(n, r);
    for (int i = 0; i <= n; ++i) CHECK(whole.A[n - i] == Rational(w[i]));
    CHECK(whole.Adual[0] == Rational(gsym::group_order(n, r)));
    for (int k = 1; k <= n; ++k) CHECK(whole.Adual[k] == 0);
}

TEST_CASE("t-design tests on the full group") {
    const int n = 3, r = 2;
    const auto all = gsym::all_elements(n, r);
    for (int t = 1; t <= n; ++t) {
        const auto verdict = gsym::t_design_test(all, t, n, r);
        CHECK(verdict.is_design);
        CHECK(verdict.dual_zeros);
        CHECK(verdict.conclusive_from_distances == (2 * t <= n));
    }
    CHECK(gsym::max_design_strength(all, n, r) == n);
    const auto md = gsym::min_nonzero_distance(all, n, r);
    CHECK(md.d == 1);
    CHECK_FALSE(md.no_pairs);

    const auto md_single = gsym::min_nonzero_distance({gsym::identity_element(n, r)}, n, r);
    CHECK(md_single.d == n + 1);
    CHECK(md_single.no_pairs);
    CHECK(gsym::max_design_strength({gsym::identity_element(n, r)}, n, r) == 0);
}

TEST_CASE("d-codes: three-way agreement") {
    // min_nonzero_distance >= d iff the clique test iff the direct oracle
    const int n = 3, r = 2;
    const auto universe = gsym::all_elements(n, r);
    std::mt19937_64 rng(0xd157);
    std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
    std::vector<std::vector<WreathElement>> battery{{gsym::identity_element(n, r)}, universe};
    for (int trial = 0; trial < 10; ++trial) {
        std::set<WreathElement> chosen;
        const std::size_t size = 1 + trial;
        while (chosen.size() < size) chosen.insert(universe[pick(rng)]);
        battery.emplace_back(chosen.begin(), chosen.end());
    }
    for (const auto& Y : battery) {
        const int dmin = gsym::min_nonzero_distance(Y, n, r).d;
        for (int d = 1; d <= n; ++d) {
            const auto sig =
                gsym::make_parabolic(gsym::Partition(std::vector<int>(n - d + 1, 1)), d - 1, n, r);
            const bool code = dmin >= d;
            CHECK(gsym::is_clique(Y, sig, n, r) == code);
            CHECK(gsym::is_clique_direct(Y, sig, n, r) == code);
        }
    }
}

TEST_CASE("design and code bounds") {
    CHECK(gsym::design_code_bounds(3, 4, 2, 2) ==
          std::pair{Integer(96), Integer(4 * 4 * 6)});
    CHECK(gsym::design_code_bounds(5, 3, 0, 5).first == 1);
    // r = 1 upper bound is the permutation-code bound (n)_(n-d+1)
    CHECK(gsym::design_code_bounds(6, 1, 0, 3).second ==
          gsym::falling_factorial(Integer(6), 4));
}

TEST_CASE("predicted distance distribution reproduces w_i for the whole group") {
    for (int n = 1; n <= 4; ++n) {
        for (int r = 1; r <= 3; ++r) {
            const auto w = gsym::fixed_point_counts(n, r);
            const auto predicted =
                gsym::predicted_distance_distribution(n, r, n, gsym::group_order(n, r));
            REQUIRE(predicted.size() == static_cast<std::size_t>(n));
            for (int i = 0; i <= n - 1; ++i) CHECK(predicted[i] == Rational(w[i]));
        }
    }
}
