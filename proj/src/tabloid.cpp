#include "gsym/tabloid.hpp"

#include "gsym/cyclic.hpp"
#include "gsym/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace gsym {

namespace {
const Partition kEmptyPartition{};
constexpr long long kTabloidGuard = 100000;
} // namespace

const Partition& TransitivityType::at(int subgroup_order) const {
    auto it = by_subgroup_.find(subgroup_order);
    return it == by_subgroup_.end() ? kEmptyPartition : it->second;
}

void TransitivityType::set(int subgroup_order, Partition p) {
    if (p.empty())
        by_subgroup_.erase(subgroup_order);
    else
        by_subgroup_[subgroup_order] = std::move(p);
}

int TransitivityType::norm() const {
    int total = 0;
    for (const auto& [d, p] : by_subgroup_) total += p.size();
    return total;
}

TransitivityType make_simple(const DoubleShape& shape, int n, int r) {
    if (shape.sigma.size() + shape.rho.size() != n)
        throw std::invalid_argument("make_simple: |sigma| + |rho| != n");
    if (r == 1 && !shape.rho.empty())
        throw std::invalid_argument("make_simple: rho must be empty for r = 1");
    TransitivityType sig;
    sig.set(r, shape.rho);
    sig.set(1, shape.sigma);  // after rho, so r = 1 keeps sigma
    return sig;
}

TransitivityType make_parabolic(const Partition& sigma, int k, int n, int r) {
    if (r == 1)
        return make_simple({k > 0 ? union_parts(sigma, Partition({k})) : sigma, Partition{}}, n, r);
    DoubleShape shape{sigma, k > 0 ? Partition({k}) : Partition{}};
    return make_simple(shape, n, r);
}

namespace {

void validate_type(const TransitivityType& sig, int n, int r) {
    if (sig.norm() != n) throw std::invalid_argument("TransitivityType: norm != n");
    for (const auto& [d, p] : sig.entries())
        if (d < 1 || r % d != 0)
            throw std::invalid_argument("TransitivityType: key is not a divisor of r");
}

// Row slots of the type: (subgroup order, row length), subgroups ascending.
std::vector<std::pair<int, int>> row_specs(const TransitivityType& sig) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [d, p] : sig.entries())
        for (int part : p.parts()) out.emplace_back(d, part);
    return out;
}

} // namespace

Integer stabilizer_order(const TransitivityType& sig, int n, int r) {
    validate_type(sig, n, r);
    Integer order = 1;
    for (const auto& [d, k] : row_specs(sig)) order *= integer_power(Integer(d), k) * factorial(k);
    return order;
}

Integer tabloid_count(const TransitivityType& sig, int n, int r) {
    return group_order(n, r) / stabilizer_order(sig, n, r);
}

std::vector<TransitivityType> enumerate_types(int n, int r) {
    const std::vector<int> divisors = divisors_of(r);
    const int slots = static_cast<int>(divisors.size());
    std::vector<TransitivityType> out;
    TransitivityType current;
    std::function<void(int, int)> fill = [&](int slot, int remaining) {
        if (slot == slots - 1) {
            for (const Partition& p : enumerate_partitions(remaining)) {
                current.set(divisors[slot], p);
                out.push_back(current);
                current.set(divisors[slot], Partition());
            }
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            for (const Partition& p : enumerate_partitions(k)) {
                current.set(divisors[slot], p);
                fill(slot + 1, remaining - k);
                current.set(divisors[slot], Partition());
            }
        }
    };
    fill(0, n);
    return out;
}

std::vector<Tabloid> enumerate_tabloids(const TransitivityType& sig, int n, int r, bool allow_big) {
    validate_type(sig, n, r);
    const Integer count = tabloid_count(sig, n, r);
    if (!allow_big && count > kTabloidGuard)
        throw ScaleGuardError("enumerate_tabloids: " + count.str() + " tabloids exceed the guard of " +
                              std::to_string(kTabloidGuard) + "; pass allow_big to override");

    const auto specs = row_specs(sig);
    std::vector<Tabloid> out;
    Tabloid current;
    current.rows.resize(specs.size());
    std::vector<bool> used(n, false);

    // Per row: choose the index set ascending, then coset representatives.
    std::function<void(std::size_t)> fill_row = [&](std::size_t row) {
        if (row == specs.size()) {
            out.push_back(current);
            return;
        }
        const auto [d, len] = specs[row];
        const int cosets = r / d;
        std::vector<int> chosen;
        std::function<void(int, int)> pick = [&](int from, int needed) {
            if (needed == 0) {
                std::vector<int> reps(len, 0);
                std::function<void(int)> assign = [&](int cell) {
                    if (cell == len) {
                        TabloidRow& slot = current.rows[row];
                        slot.subgroup_order = d;
                        slot.cells.clear();
                        for (int c = 0; c < len; ++c) slot.cells.emplace_back(reps[c], chosen[c]);
                        fill_row(row + 1);
                        return;
                    }
                    for (int rep = 0; rep < cosets; ++rep) {
                        reps[cell] = rep;
                        assign(cell + 1);
                    }
                };
                assign(0);
                return;
            }
            for (int i = from; i <= n - needed + 1; ++i) {
                if (used[i - 1]) continue;
                used[i - 1] = true;
                chosen.push_back(i);
                pick(i + 1, needed - 1);
                chosen.pop_back();
                used[i - 1] = false;
            }
        };
        pick(1, len);
    };
    fill_row(0);
    return out;
}

Tabloid act_on_tabloid(const WreathElement& w, const Tabloid& tab) {
    Tabloid out;
    out.rows.reserve(tab.rows.size());
    for (const TabloidRow& row : tab.rows) {
        const int cosets = w.r / row.subgroup_order;
        TabloidRow moved;
        moved.subgroup_order = row.subgroup_order;
        moved.cells.reserve(row.cells.size());
        for (const auto& [c, i] : row.cells) {
            const int j = w.perm[i - 1];
            moved.cells.emplace_back((c + w.signs[j - 1]) % cosets, j);
        }
        std::sort(moved.cells.begin(), moved.cells.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        out.rows.push_back(std::move(moved));
    }
    return out;
}

std::optional<Integer> transitivity_index(const std::vector<WreathElement>& Y,
                                          const TransitivityType& sig, int n, int r,
                                          bool allow_big) {
    if (Y.empty()) throw std::invalid_argument("transitivity_index: Y must be non-empty");
    const auto tabloids = enumerate_tabloids(sig, n, r, allow_big);
    std::map<Tabloid, std::size_t> id;
    for (std::size_t t = 0; t < tabloids.size(); ++t) id.emplace(tabloids[t], t);

    const std::size_t count = tabloids.size();
    std::vector<long long> pair_counts(count * count, 0);
    for (const WreathElement& y : Y) {
        validate_element(y, n, r);
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t target = id.at(act_on_tabloid(y, tabloids[t]));
            ++pair_counts[t * count + target];
        }
    }
    const long long c = pair_counts[0];
    for (long long entry : pair_counts)
        if (entry != c) return std::nullopt;
    return Integer(c);
}

bool is_clique_direct(const std::vector<WreathElement>& Y, const TransitivityType& sig, int n,
                      int r, bool allow_big) {
    if (Y.empty()) throw std::invalid_argument("is_clique_direct: Y must be non-empty");
    const auto tabloids = enumerate_tabloids(sig, n, r, allow_big);
    for (std::size_t a = 0; a < Y.size(); ++a) {
        validate_element(Y[a], n, r);
        for (std::size_t b = a + 1; b < Y.size(); ++b) {
            const WreathElement q = multiply(inverse(Y[a]), Y[b]);
            for (const Tabloid& tab : tabloids)
                if (act_on_tabloid(q, tab) == tab) return false;
        }
    }
    return true;
}

} // namespace gsym
