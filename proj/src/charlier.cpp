#include "gsym/charlier.hpp"

#include "gsym/errors.hpp"
#include "gsym/scheme.hpp"
#include "gsym/wreath_char.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace gsym {

Rational charlier(int k, const Rational& a, const Integer& x) {
    if (k < 0) throw std::invalid_argument("charlier: k must be nonnegative");
    if (a <= 0) throw std::invalid_argument("charlier: a must be positive");
    Rational sum = 0;
    Rational a_pow = 1;  // a^-j
    for (int j = 0; j <= k; ++j) {
        Rational term = Rational(binomial(k, j)) * a_pow * Rational(falling_factorial(x, j));
        sum += ((k - j) % 2 == 0) ? term : -term;
        a_pow /= a;
    }
    return sum;
}

std::vector<Integer> fixed_point_counts(int n, int r) {
    std::vector<Integer> w(n + 1);
    for (int i = 0; i <= n; ++i) {
        Rational sum = 0;
        for (int j = 0; j <= n - i; ++j) {
            const Rational term = Rational(1, factorial(j) * integer_power(Integer(r), j));
            sum += (j % 2 == 0) ? term : -term;
        }
        const Rational value =
            Rational(factorial(n) * integer_power(Integer(r), n - i), factorial(i)) * sum;
        if (boost::multiprecision::denominator(value) != 1)
            throw ConsistencyError("fixed_point_counts: w_i is not an integer");
        w[i] = boost::multiprecision::numerator(value);
    }
    return w;
}

bool charlier_orthogonality_check(int n, int r) {
    const auto w = fixed_point_counts(n, r);
    const Rational a(1, r);
    for (int k = 0; k <= n; ++k) {
        for (int l = 0; l <= n; ++l) {
            if (k == l || k + l > n) continue;
            Rational sum = 0;
            for (int i = 0; i <= n; ++i)
                sum += Rational(w[i]) * charlier(k, a, Integer(i)) * charlier(l, a, Integer(i));
            if (sum != 0) return false;
        }
    }
    return true;
}

Integer stirling2(int k, int i) {
    if (i < 0 || i > k) return 0;
    if (k == 0) return i == 0 ? 1 : 0;
    // S(k, i) = i S(k-1, i) + S(k-1, i-1)
    std::vector<Integer> row(k + 1, Integer(0));
    row[0] = 1;
    for (int step = 1; step <= k; ++step) {
        std::vector<Integer> next(k + 1, Integer(0));
        for (int m = 1; m <= step; ++m) next[m] = Integer(m) * row[m] + row[m - 1];
        row = std::move(next);
    }
    return row[i];
}

Rational poisson_moment(int k, const Rational& mean) {
    if (k == 0) return 1;
    Rational sum = 0;
    Rational mean_pow = 1;
    for (int i = 1; i <= k; ++i) {
        mean_pow *= mean;
        sum += mean_pow * Rational(stirling2(k, i));
    }
    return sum;
}

int distance(const WreathElement& x, const WreathElement& y) {
    if (x.r != y.r || x.n() != y.n()) throw DimensionError("distance: mismatched n or r");
    return x.n() - theta(multiply(inverse(x), y));
}

DistanceDistribution distance_distribution(const std::vector<WreathElement>& Y, int n, int r) {
    if (Y.empty()) throw std::invalid_argument("distance_distribution: Y must be non-empty");
    std::set<WreathElement> distinct(Y.begin(), Y.end());
    if (distinct.size() != Y.size())
        throw std::invalid_argument("distance_distribution: repeated element");

    std::vector<long long> pair_counts(n + 1, 0);
    for (const WreathElement& x : Y) {
        validate_element(x, n, r);
        const WreathElement xinv = inverse(x);
        for (const WreathElement& y : Y) ++pair_counts[n - theta(multiply(xinv, y))];
    }

    DistanceDistribution out;
    out.n = n;
    out.r = r;
    out.subset_size = Integer(static_cast<long long>(Y.size()));
    out.A.resize(n + 1);
    for (int i = 0; i <= n; ++i) out.A[i] = Rational(Integer(pair_counts[i]), out.subset_size);

    const Rational a(1, r);
    out.Adual.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rational transform = 0;
        for (int i = 0; i <= n; ++i) transform += charlier(k, a, Integer(n - i)) * out.A[i];
        // same value straight from the pair statistics of theta
        Rational pair_sum = 0;
        for (int i = 0; i <= n; ++i)
            pair_sum += Rational(Integer(pair_counts[i])) * charlier(k, a, Integer(n - i));
        pair_sum /= Rational(out.subset_size);
        if (transform != pair_sum)
            throw ConsistencyError("distance_distribution: the two A' routes disagree");
        out.Adual[k] = transform;
    }
    return out;
}

namespace {

TransitivityType t_design_type(int t, int n, int r) {
    const Partition ones = t > 0 ? Partition(std::vector<int>(t, 1)) : Partition{};
    return make_parabolic(ones, n - t, n, r);
}

} // namespace

TDesignVerdict t_design_test(const std::vector<WreathElement>& Y, int t, int n, int r) {
    if (t < 1 || t > n) throw std::invalid_argument("t_design_test: need 1 <= t <= n");
    const auto dist = distance_distribution(Y, n, r);
    TDesignVerdict verdict;
    verdict.dual_zeros = true;
    for (int k = 1; k <= t; ++k)
        if (dist.Adual[k] != 0) verdict.dual_zeros = false;
    verdict.conclusive_from_distances = 2 * t <= n;
    if (!verdict.dual_zeros) {
        verdict.is_design = false;  // a nonzero dual distance already rules the design out
        return verdict;
    }
    if (verdict.conclusive_from_distances) {
        verdict.is_design = true;
        return verdict;
    }
    verdict.is_design = is_design(Y, t_design_type(t, n, r), n, r);
    return verdict;
}

std::pair<Integer, Integer> design_code_bounds(int n, int r, int t, int d) {
    if (t < 0 || t > n || d < 1 || d > n + 1)
        throw std::invalid_argument("design_code_bounds: need 0 <= t <= n and 1 <= d <= n+1");
    const Integer lower = integer_power(Integer(r), t) * falling_factorial(Integer(n), t);
    const Integer upper =
        integer_power(Integer(r), n - d + 1) * falling_factorial(Integer(n), n - d + 1);
    return {lower, upper};
}

std::vector<Rational> predicted_distance_distribution(int n, int r, int t, const Integer& size) {
    if (t < 0 || t > n) throw std::invalid_argument("predicted_distance_distribution: bad t");
    std::vector<Rational> out;  // entry i is A_(n-i), i = 0..n-1
    out.reserve(n);
    for (int i = 0; i <= n - 1; ++i) {
        Rational value = 0;
        for (int j = i; j <= t; ++j) {
            const Rational ratio =
                Rational(size, integer_power(Integer(r), j) * falling_factorial(Integer(n), j)) -
                1;
            const Rational term = Rational(binomial(j, i) * binomial(n, j)) * ratio;
            value += ((j - i) % 2 == 0) ? term : -term;
        }
        out.push_back(value);
    }
    return out;
}

int max_design_strength(const std::vector<WreathElement>& Y, int n, int r) {
    const auto dist = distance_distribution(Y, n, r);
    int best = 0;
    for (int t = 1; t <= n; ++t) {
        if (dist.Adual[t] != 0) break;
        if (2 * t <= n) {
            best = t;
            continue;
        }
        if (is_design(Y, t_design_type(t, n, r), n, r))
            best = t;
        else
            break;
    }
    return best;
}

MinNonzeroDistance min_nonzero_distance(const std::vector<WreathElement>& Y, int n, int r) {
    const auto dist = distance_distribution(Y, n, r);
    for (int i = 1; i <= n; ++i)
        if (dist.A[i] != 0) return {i, false};
    return {n + 1, true};
}

} // namespace gsym
