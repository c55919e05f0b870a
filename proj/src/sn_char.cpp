#include "gsym/sn_char.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gsym {

namespace {

// Beta-set of mu: distinct values mu_j + (m - j), descending.
std::vector<int> beta_set(const Partition& mu) {
    const int m = mu.length();
    std::vector<int> beta(m);
    for (int j = 1; j <= m; ++j) beta[j - 1] = mu.part(j) + m - j;
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int m = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 1; i <= m; ++i) {
        const int part = beta[i - 1] - (m - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

// Murnaghan-Nakayama: strip border strips of length rho_1, recurse with the
// sign (-1)^leg where leg counts beads passed on the abacus.
Integer mn_recurse(const Partition& mu, const Partition& rho,
                   std::map<std::pair<std::vector<int>, std::vector<int>>, Integer>& memo) {
    if (mu.size() == 0) return 1;
    const auto key = std::make_pair(mu.parts(), rho.parts());
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int strip = rho.part(1);
    const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
    const std::vector<int> beta = beta_set(mu);

    Integer total = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
        const int target = beta[j] - strip;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int leg = 0;
        for (int b : beta)
            if (target < b && b < beta[j]) ++leg;
        std::vector<int> moved = beta;
        moved[j] = target;
        const Integer sub = mn_recurse(partition_from_beta(std::move(moved)), rest, memo);
        total += (leg % 2 == 0) ? sub : -sub;
    }
    memo.emplace(key, total);
    return total;
}

} // namespace

Integer sn_character(const Partition& mu, const Partition& rho) {
    if (mu.size() != rho.size())
        throw std::invalid_argument("sn_character: |mu| != |rho|");
    static std::mutex mutex;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo;
    std::lock_guard<std::mutex> lock(mutex);
    return mn_recurse(mu, rho, memo);
}

Integer hook_degree(const Partition& mu) {
    const Partition conj = conjugate(mu);
    Integer hooks = 1;
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j)
            hooks *= mu.part(i) - j + conj.part(j) - i + 1;
    return factorial(mu.size()) / hooks;
}

Integer sn_centralizer_order(const Partition& rho) {
    std::map<int, int> mult;
    for (int part : rho.parts()) ++mult[part];
    Integer z = 1;
    for (const auto& [part, m] : mult) z *= integer_power(Integer(part), m) * factorial(m);
    return z;
}

} // namespace gsym
