#include "gsym/wreath_char.hpp"

#include "gsym/charlier.hpp"
#include "gsym/errors.hpp"
#include "gsym/parallel.hpp"
#include "gsym/sn_char.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace gsym {

ClassFunction::ClassFunction(int n, int r) : n_(n), r_(r) {
    for (const ClassIndex& cls : enumerate_classes(n, r)) values_.emplace(cls, Cyclotomic::zero(r));
}

const Cyclotomic& ClassFunction::at(const ClassIndex& cls) const {
    auto it = values_.find(cls);
    if (it == values_.end()) throw std::invalid_argument("ClassFunction: unknown class");
    return it->second;
}

void ClassFunction::set(const ClassIndex& cls, Cyclotomic value) {
    auto it = values_.find(cls);
    if (it == values_.end()) throw std::invalid_argument("ClassFunction: unknown class");
    it->second = std::move(value);
}

int theta(const WreathElement& w) {
    int fixed = 0;
    for (int i = 1; i <= w.n(); ++i)
        if (w.perm[i - 1] == i && w.signs[i - 1] == 0) ++fixed;
    return fixed;
}

Integer wreath_degree(const ClassIndex& lam, int n, int r) {
    if (lam.total_size() != n) throw std::invalid_argument("wreath_degree: |lambda| != n");
    Integer degree = factorial(n);
    for (int g = 0; g < r; ++g) {
        const Partition& p = lam.at(g);
        degree /= factorial(p.size());
        degree *= hook_degree(p);
    }
    return degree;
}

namespace {

// chi^lambda(w) as the transversal induction sum: cosets xS of S_n/S with
// x^{-1} w x in G wr S correspond to assignments of the cycles of w to the
// residues g with block capacities |lambda(g)|. Each such coset contributes
// omega^(sum_g g * signsum_g) * prod_g psi^lambda(g)(cycle lengths sent to g).
Cyclotomic induced_value(const ClassIndex& lam, const ClassIndex& cls, int n, int r) {
    const WreathElement rep = class_representative(cls, n, r);
    const auto cycles = cycles_with_signs(rep);

    std::vector<int> capacity(r, 0);
    for (int g = 0; g < r; ++g) capacity[g] = lam.at(g).size();

    std::vector<int> sign_sum(r, 0);
    std::vector<std::vector<int>> lengths(r);
    std::map<int, Integer> coefficient;  // omega exponent -> integer sum

    std::function<void(std::size_t)> assign = [&](std::size_t c) {
        if (c == cycles.size()) {
            Integer product = 1;
            long long exponent = 0;
            for (int g = 0; g < r; ++g) {
                product *= sn_character(lam.at(g), Partition::from_unsorted(lengths[g]));
                if (product == 0) return;
                exponent += static_cast<long long>(g) * sign_sum[g];
            }
            coefficient[static_cast<int>(exponent % r)] += product;
            return;
        }
        const auto [len, sign] = cycles[c];
        for (int g = 0; g < r; ++g) {
            if (capacity[g] < len) continue;
            capacity[g] -= len;
            sign_sum[g] = (sign_sum[g] + sign) % r;
            lengths[g].push_back(len);
            assign(c + 1);
            lengths[g].pop_back();
            sign_sum[g] = (sign_sum[g] - sign % r + r) % r;
            capacity[g] += len;
        }
    };
    assign(0);

    Cyclotomic value = Cyclotomic::zero(r);
    for (const auto& [exponent, coeff] : coefficient)
        value += Cyclotomic::root_power(r, exponent) * coeff;
    return value;
}

} // namespace

Cyclotomic wreath_character_value(const ClassIndex& lam, const ClassIndex& cls, int n, int r) {
    if (lam.total_size() != n || cls.total_size() != n)
        throw DimensionError("wreath_character_value: label and class must have total size n");
    for (const auto& index : {lam, cls})
        for (const auto& [g, p] : index.entries())
            if (g < 0 || g >= r)
                throw std::invalid_argument("wreath_character_value: residue out of range");
    using Key = std::tuple<int, int, ClassIndex, ClassIndex>;
    static std::mutex mutex;
    static std::map<Key, Cyclotomic> cache;
    const Key key{n, r, lam, cls};
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    Cyclotomic value = induced_value(lam, cls, n, r);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(value)).first->second;
}

ClassFunction irreducible_character(const ClassIndex& lam, int n, int r) {
    ClassFunction chi(n, r);
    for (const auto& [cls, unused] : chi.values()) chi.set(cls, wreath_character_value(lam, cls, n, r));
    return chi;
}

CharacterTable character_table(int n, int r, bool allow_big) {
    const auto classes = enumerate_classes(n, r);
    if (!allow_big && (group_order(n, r) > 1000000 || classes.size() > 400))
        throw ScaleGuardError("character_table: table for n=" + std::to_string(n) + ", r=" +
                              std::to_string(r) + " exceeds the desk-scale guard");
    CharacterTable table;
    table.n = n;
    table.r = r;
    table.labels = classes;
    table.sizes.reserve(classes.size());
    for (const auto& cls : classes) table.sizes.push_back(class_size(cls, n, r));
    table.values.assign(classes.size(), std::vector<Cyclotomic>(classes.size()));
    parallel_for(classes.size() * classes.size(), [&](std::size_t flat) {
        const std::size_t row = flat / classes.size();
        const std::size_t col = flat % classes.size();
        table.values[row][col] = wreath_character_value(classes[row], classes[col], n, r);
    });
    return table;
}

ClassFunction permutation_character(const TransitivityType& sig, int n, int r, bool allow_big) {
    const auto tabloids = enumerate_tabloids(sig, n, r, allow_big);
    ClassFunction xi(n, r);
    for (const auto& [cls, unused] : xi.values()) {
        const WreathElement rep = class_representative(cls, n, r);
        long long fixed = 0;
        for (const Tabloid& tab : tabloids)
            if (act_on_tabloid(rep, tab) == tab) ++fixed;
        xi.set(cls, Cyclotomic::from_rational(r, Rational(fixed)));
    }
    return xi;
}

Cyclotomic class_function_inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n() != g.n() || f.r() != g.r())
        throw DimensionError("class_function_inner_product: mismatched n or r");
    const int n = f.n();
    const int r = f.r();
    Cyclotomic sum = Cyclotomic::zero(r);
    for (const auto& [cls, value] : f.values())
        sum += value * g.at(cls).conj() * class_size(cls, n, r);
    return sum * Rational(1, group_order(n, r));
}

Integer multiplicity(const ClassFunction& f, const ClassIndex& lam) {
    const int n = f.n();
    const int r = f.r();
    if (lam.total_size() != n) throw DimensionError("multiplicity: |lambda| != n");
    Cyclotomic sum = Cyclotomic::zero(r);
    for (const auto& [cls, value] : f.values())
        sum += value * wreath_character_value(lam, cls, n, r).conj() * class_size(cls, n, r);
    const Cyclotomic normalized = sum * Rational(1, group_order(n, r));
    const Rational q = normalized.rational_part();  // throws if not rational
    if (boost::multiprecision::denominator(q) != 1 || q < 0)
        throw ConsistencyError("multiplicity: <f, chi> = " + rational_to_string(q) +
                               " is not a nonnegative integer");
    return boost::multiprecision::numerator(q);
}

ClassFunction charlier_class_function(int k, int n, int r) {
    if (k < 0 || k > n) throw std::invalid_argument("charlier_class_function: need 0 <= k <= n");
    ClassFunction f(n, r);
    const Rational a(1, r);
    for (const auto& [cls, unused] : f.values()) {
        const int fixed = theta(class_representative(cls, n, r));
        f.set(cls, Cyclotomic::from_rational(r, charlier(k, a, Integer(fixed))));
    }
    return f;
}

} // namespace gsym
