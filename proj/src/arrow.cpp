#include "gsym/arrow.hpp"

#include "gsym/cyclic.hpp"
#include "gsym/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>

namespace gsym {

namespace {

// Rows of sigma grouped by (subgroup, length); equal-length rows within one
// subgroup produce identical mu multisets, so their colourings are generated
// in non-decreasing order.
struct RowGroup {
    std::vector<int> colors;  // elements of the annihilator, ascending
    int length = 0;
    int multiplicity = 0;
};

std::vector<RowGroup> row_groups(const TransitivityType& sig, int r) {
    const GroupSpec spec(r);
    std::vector<RowGroup> groups;
    for (const auto& [d, p] : sig.entries()) {
        if (r % d != 0) throw std::invalid_argument("colorings: key is not a divisor of r");
        const auto colors = subgroup_elements(annihilator(SubgroupOfCr{d}, spec), spec);
        std::map<int, int> mult;
        for (int part : p.parts()) ++mult[part];
        for (auto it = mult.rbegin(); it != mult.rend(); ++it)
            groups.push_back(RowGroup{colors, it->first, it->second});
    }
    return groups;
}

// Enumerates every colouring's mu; budget[g], when present, caps the running
// number of boxes coloured g and prunes dead branches. The visitor returns
// false to stop the walk.
class ColoringWalker {
public:
    ColoringWalker(const TransitivityType& sig, int r, const int* budget)
        : groups_(row_groups(sig, r)), budget_(budget), r_(r) {
        used_.assign(r_, 0);
        parts_.assign(r_, {});
    }

    bool walk(const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
        visit_ = &visit;
        return group(0);
    }

private:
    bool group(std::size_t gi) {
        if (gi == groups_.size()) return (*visit_)(parts_);
        std::vector<int> previous;  // empty means no lower bound yet
        return rows_of_group(gi, 0, previous);
    }

    bool rows_of_group(std::size_t gi, int row, std::vector<int>& previous) {
        const RowGroup& g = groups_[gi];
        if (row == g.multiplicity) return group(gi + 1);
        std::vector<int> counts(g.colors.size(), 0);
        return compositions(gi, row, 0, g.length, counts, previous);
    }

    // Distribute `remaining` boxes over colours slot..end; counts built in
    // place. Rows after the first in a group must compare >= previous
    // lexicographically.
    bool compositions(std::size_t gi, int row, std::size_t slot, int remaining,
                      std::vector<int>& counts, std::vector<int>& previous) {
        if (slot + 1 == counts.size()) {
            counts[slot] = remaining;
            return finish_row(gi, row, counts, previous);
        }
        for (int take = remaining; take >= 0; --take) {
            counts[slot] = take;
            if (!previous.empty() && row > 0) {
                // prefix comparison against the previous row's vector
                bool decided_greater = false;
                bool prefix_ok = true;
                for (std::size_t s = 0; s <= slot; ++s) {
                    if (decided_greater) break;
                    if (counts[s] > previous[s]) decided_greater = true;
                    else if (counts[s] < previous[s]) { prefix_ok = false; break; }
                }
                if (!prefix_ok) continue;
            }
            if (!compositions(gi, row, slot + 1, remaining - take, counts, previous)) return false;
        }
        counts[slot] = 0;
        return true;
    }

    bool finish_row(std::size_t gi, int row, std::vector<int>& counts, std::vector<int>& previous) {
        const RowGroup& g = groups_[gi];
        if (row > 0 && !previous.empty() && counts < previous) return true;
        // apply the row: update running boxes and parts per colour
        std::vector<std::pair<int, int>> applied;  // (colour, count)
        bool feasible = true;
        for (std::size_t s = 0; s < counts.size(); ++s) {
            if (counts[s] == 0) continue;
            const int colour = g.colors[s];
            used_[colour] += counts[s];
            parts_[colour].push_back(counts[s]);
            applied.emplace_back(colour, counts[s]);
            if (budget_ && used_[colour] > budget_[colour]) feasible = false;
        }
        bool keep_going = true;
        if (feasible) {
            std::vector<int> saved = previous;
            previous = counts;
            keep_going = rows_of_group(gi, row + 1, previous);
            previous = std::move(saved);
        }
        for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
            used_[it->first] -= it->second;
            parts_[it->first].pop_back();
        }
        return keep_going;
    }

    std::vector<RowGroup> groups_;
    const int* budget_;
    int r_;
    std::vector<int> used_;
    std::vector<std::vector<int>> parts_;  // per colour, parts collected so far
    const std::function<bool(const std::vector<std::vector<int>>&)>* visit_ = nullptr;
};

ClassIndex mu_from_parts(const std::vector<std::vector<int>>& parts) {
    ClassIndex mu;
    for (std::size_t g = 0; g < parts.size(); ++g)
        if (!parts[g].empty()) mu.set(static_cast<int>(g), Partition::from_unsorted(parts[g]));
    return mu;
}

} // namespace

std::vector<ClassIndex> colorings(const TransitivityType& sig, int r) {
    std::set<ClassIndex> seen;
    ColoringWalker walker(sig, r, nullptr);
    walker.walk([&](const std::vector<std::vector<int>>& parts) {
        seen.insert(mu_from_parts(parts));
        return true;
    });
    return {seen.begin(), seen.end()};
}

bool arrow(const TransitivityType& sig, const ClassIndex& lam, int n, int r) {
    if (sig.norm() != n || lam.total_size() != n)
        throw std::invalid_argument("arrow: sigma and lambda must both have total size n");
    std::vector<int> budget(r, 0);
    for (const auto& [g, p] : lam.entries()) {
        if (g < 0 || g >= r) throw std::invalid_argument("arrow: lambda key out of range");
        budget[g] = p.size();
    }
    bool found = false;
    ColoringWalker walker(sig, r, budget.data());
    walker.walk([&](const std::vector<std::vector<int>>& parts) {
        for (int g = 0; g < r; ++g) {
            int boxes = 0;
            for (int c : parts[g]) boxes += c;
            if (boxes != budget[g]) return true;  // sizes must match per colour
        }
        for (int g = 0; g < r; ++g) {
            if (parts[g].empty()) continue;
            if (!dominated_by(Partition::from_unsorted(parts[g]), lam.at(g))) return true;
        }
        found = true;
        return false;
    });
    return found;
}

const std::vector<ClassIndex>& m_set(const TransitivityType& sig, int n, int r) {
    static std::mutex mutex;
    static std::map<std::tuple<TransitivityType, int, int>, std::vector<ClassIndex>> cache;
    const auto key = std::make_tuple(sig, n, r);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    if (sig.norm() != n) throw std::invalid_argument("m_set: norm(sigma) != n");
    const auto mus = colorings(sig, r);
    std::vector<ClassIndex> out;
    for (const ClassIndex& lam : enumerate_classes(n, r)) {
        for (const ClassIndex& mu : mus) {
            bool ok = true;
            for (int g = 0; g < r && ok; ++g) {
                const Partition& mp = mu.at(g);
                const Partition& lp = lam.at(g);
                if (mp.size() != lp.size() || !dominated_by(mp, lp)) ok = false;
            }
            if (ok) {
                out.push_back(lam);
                break;
            }
        }
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(key, std::move(out)).first->second;
}

bool succeq(const TransitivityType& sig, const TransitivityType& tau, int n, int r) {
    const auto& ms = m_set(sig, n, r);
    const auto& mt = m_set(tau, n, r);
    const std::set<ClassIndex> in_sigma(ms.begin(), ms.end());
    for (const ClassIndex& lam : mt)
        if (!in_sigma.count(lam)) return false;
    return true;
}

bool parabolic_succeq(const Partition& sigma, int k, const Partition& tau, int ell) {
    if (k < 0 || ell < 0) throw std::invalid_argument("parabolic_succeq: negative part");
    if (sigma.size() + k != tau.size() + ell)
        throw std::invalid_argument("parabolic_succeq: sizes differ");
    if (k > ell) return false;
    const Partition left = k > 0 ? union_parts(sigma, Partition({k})) : sigma;
    const Partition right = ell > 0 ? union_parts(tau, Partition({ell})) : tau;
    return dominated_by(left, right);
}

NecessaryConditions necessary_conditions(const DoubleShape& a, const DoubleShape& b) {
    if (a.sigma.size() + a.rho.size() != b.sigma.size() + b.rho.size())
        throw std::invalid_argument("necessary_conditions: sizes differ");
    NecessaryConditions out;
    out.rho_dominated = dominated_by(a.rho, b.rho);
    out.sigma_conj_dominates = dominated_by(conjugate(b.sigma), conjugate(a.sigma));
    out.union_dominated =
        dominated_by(union_parts(a.sigma, a.rho), union_parts(b.sigma, b.rho));
    return out;
}

} // namespace gsym
