#include "gsym/scheme.hpp"

#include "gsym/arrow.hpp"
#include "gsym/cyclic.hpp"
#include "gsym/errors.hpp"
#include "gsym/wreath_char.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace gsym {

namespace {

void validate_subset(const std::vector<WreathElement>& Y, int n, int r) {
    if (Y.empty()) throw std::invalid_argument("subset must be non-empty");
    std::set<WreathElement> distinct;
    for (const WreathElement& y : Y) {
        validate_element(y, n, r);
        if (!distinct.insert(y).second)
            throw std::invalid_argument("subset contains a repeated element");
    }
}

Rational checked_nonneg_rational(const Cyclotomic& value, const char* what) {
    if (!value.is_rational())
        throw ConsistencyError(std::string(what) + ": value is not rational");
    const Rational q = value.rational_part();
    if (q < 0) throw ConsistencyError(std::string(what) + ": value is negative");
    return q;
}

} // namespace

std::map<ClassIndex, Rational> inner_distribution(const std::vector<WreathElement>& Y, int n,
                                                  int r) {
    validate_subset(Y, n, r);
    std::map<ClassIndex, long long> pair_counts;
    for (const WreathElement& x : Y) {
        const WreathElement xinv = inverse(x);
        for (const WreathElement& y : Y) ++pair_counts[cycle_type(multiply(xinv, y))];
    }
    std::map<ClassIndex, Rational> out;
    const Integer size(static_cast<long long>(Y.size()));
    for (const auto& [mu, count] : pair_counts) out.emplace(mu, Rational(Integer(count), size));
    return out;
}

Rational dual_value(const std::map<ClassIndex, Rational>& inner, const ClassIndex& lam, int n,
                    int r) {
    Cyclotomic sum = Cyclotomic::zero(r);
    for (const auto& [mu, a] : inner) sum += wreath_character_value(lam, mu, n, r) * a;
    const Cyclotomic value = sum * Rational(wreath_degree(lam, n, r));
    return checked_nonneg_rational(value, "dual_value");
}

std::map<ClassIndex, Rational> dual_distribution(const std::vector<WreathElement>& Y, int n,
                                                 int r) {
    const auto inner = inner_distribution(Y, n, r);
    std::map<ClassIndex, Rational> out;
    for (const ClassIndex& lam : enumerate_classes(n, r))
        out.emplace(lam, dual_value(inner, lam, n, r));
    return out;
}

std::map<ClassIndex, Rational> dual_distribution_pair_sum(const std::vector<WreathElement>& Y,
                                                          int n, int r) {
    validate_subset(Y, n, r);
    std::map<ClassIndex, Rational> out;
    const Rational scale(Integer(1), Integer(static_cast<long long>(Y.size())));
    for (const ClassIndex& lam : enumerate_classes(n, r)) {
        Cyclotomic sum = Cyclotomic::zero(r);
        for (const WreathElement& x : Y) {
            const WreathElement xinv = inverse(x);
            for (const WreathElement& y : Y)
                sum += wreath_character_value(lam, cycle_type(multiply(xinv, y)), n, r);
        }
        const Cyclotomic value = sum * (scale * Rational(wreath_degree(lam, n, r)));
        out.emplace(lam, checked_nonneg_rational(value, "dual_distribution_pair_sum"));
    }
    return out;
}

bool is_design(const std::vector<WreathElement>& Y, const TransitivityType& sig, int n, int r) {
    const auto inner = inner_distribution(Y, n, r);
    const ClassIndex trivial = trivial_label(n);
    for (const ClassIndex& lam : m_set(sig, n, r)) {
        if (lam == trivial) continue;
        if (dual_value(inner, lam, n, r) != 0) return false;
    }
    return true;
}

std::vector<ClassIndex> clique_classes(const TransitivityType& sig, int n, int r) {
    if (sig.norm() != n) throw std::invalid_argument("clique_classes: norm(sigma) != n");
    const GroupSpec spec(r);

    // per row (U, k): all of Lambda_k(U), supported on the elements of U
    std::set<ClassIndex> acc{ClassIndex{}};
    for (const auto& [d, p] : sig.entries()) {
        const auto elements = subgroup_elements(SubgroupOfCr{d}, spec);
        for (int k : p.parts()) {
            std::vector<ClassIndex> row_types;
            ClassIndex current;
            std::function<void(std::size_t, int)> fill = [&](std::size_t slot, int remaining) {
                if (slot + 1 == elements.size()) {
                    for (const Partition& q : enumerate_partitions(remaining)) {
                        current.set(elements[slot], q);
                        row_types.push_back(current);
                        current.set(elements[slot], Partition());
                    }
                    return;
                }
                for (int take = 0; take <= remaining; ++take)
                    for (const Partition& q : enumerate_partitions(take)) {
                        current.set(elements[slot], q);
                        fill(slot + 1, remaining - take);
                        current.set(elements[slot], Partition());
                    }
            };
            fill(0, k);

            std::set<ClassIndex> merged;
            for (const ClassIndex& base : acc) {
                for (const ClassIndex& extra : row_types) {
                    ClassIndex joined = base;
                    for (const auto& [g, q] : extra.entries())
                        joined.set(g, union_parts(joined.at(g), q));
                    merged.insert(std::move(joined));
                }
            }
            acc = std::move(merged);
        }
    }
    return {acc.begin(), acc.end()};
}

bool is_clique(const std::vector<WreathElement>& Y, const TransitivityType& sig, int n, int r) {
    const auto inner = inner_distribution(Y, n, r);
    const ClassIndex identity = identity_class(n);
    for (const ClassIndex& mu : clique_classes(sig, n, r)) {
        if (mu == identity) continue;
        auto it = inner.find(mu);
        if (it != inner.end() && it->second != 0) return false;
    }
    return true;
}

BoundReport clique_design_bounds(const std::vector<WreathElement>& Y, const TransitivityType& sig,
                                 int n, int r) {
    BoundReport report;
    report.subset_size = Integer(static_cast<long long>(Y.size()));
    report.coset_count = tabloid_count(sig, n, r);
    report.clique = is_clique(Y, sig, n, r);
    report.design = is_design(Y, sig, n, r);
    report.clique_bound_holds = !report.clique || report.subset_size <= report.coset_count;
    report.design_bound_holds = !report.design || report.subset_size >= report.coset_count;
    report.equality = report.subset_size == report.coset_count;
    report.sharp = report.equality && (report.clique || report.design);
    return report;
}

} // namespace gsym
