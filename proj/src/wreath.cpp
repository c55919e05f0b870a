#include "gsym/wreath.hpp"

#include "gsym/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gsym {

WreathElement identity_element(int n, int r) {
    WreathElement e;
    e.r = r;
    e.signs.assign(n, 0);
    e.perm.resize(n);
    std::iota(e.perm.begin(), e.perm.end(), 1);
    return e;
}

void validate_element(const WreathElement& w, int n, int r) {
    if (w.r != r || w.n() != n || static_cast<int>(w.signs.size()) != n)
        throw DimensionError("WreathElement: wrong n or r");
    std::vector<bool> seen(n, false);
    for (int image : w.perm) {
        if (image < 1 || image > n || seen[image - 1])
            throw std::invalid_argument("WreathElement: perm is not a bijection on [n]");
        seen[image - 1] = true;
    }
    for (int s : w.signs)
        if (s < 0 || s >= r) throw std::invalid_argument("WreathElement: sign out of range");
}

namespace {
const Partition kEmptyPartition{};

void require_compatible(const WreathElement& a, const WreathElement& b) {
    if (a.r != b.r || a.n() != b.n())
        throw DimensionError("WreathElement: mismatched n or r");
}

std::vector<int> inverse_perm(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}
} // namespace

const Partition& ClassIndex::at(int g) const {
    auto it = by_element_.find(g);
    return it == by_element_.end() ? kEmptyPartition : it->second;
}

void ClassIndex::set(int g, Partition p) {
    if (p.empty())
        by_element_.erase(g);
    else
        by_element_[g] = std::move(p);
}

int ClassIndex::total_size() const {
    int total = 0;
    for (const auto& [g, p] : by_element_) total += p.size();
    return total;
}

ClassIndex identity_class(int n) {
    ClassIndex c;
    c.set(0, Partition(std::vector<int>(n, 1)));
    return c;
}

ClassIndex trivial_label(int n) {
    ClassIndex c;
    if (n > 0) c.set(0, Partition({n}));
    return c;
}

WreathElement multiply(const WreathElement& a, const WreathElement& b) {
    require_compatible(a, b);
    const int n = a.n();
    const std::vector<int> a_inv = inverse_perm(a.perm);
    WreathElement out;
    out.r = a.r;
    out.signs.resize(n);
    out.perm.resize(n);
    for (int i = 1; i <= n; ++i) {
        out.perm[i - 1] = a.perm[b.perm[i - 1] - 1];
        out.signs[i - 1] = (a.signs[i - 1] + b.signs[a_inv[i - 1] - 1]) % a.r;
    }
    return out;
}

WreathElement inverse(const WreathElement& a) {
    const int n = a.n();
    WreathElement out;
    out.r = a.r;
    out.signs.resize(n);
    out.perm = inverse_perm(a.perm);
    for (int j = 1; j <= n; ++j)
        out.signs[j - 1] = (a.r - a.signs[a.perm[j - 1] - 1]) % a.r;
    return out;
}

std::pair<int, int> act(const WreathElement& a, std::pair<int, int> point) {
    const auto [c, i] = point;
    if (i < 1 || i > a.n()) throw std::invalid_argument("act: index out of range");
    const int j = a.perm[i - 1];
    return {(((c + a.signs[j - 1]) % a.r) + a.r) % a.r, j};
}

std::vector<std::pair<int, int>> cycles_with_signs(const WreathElement& a) {
    const int n = a.n();
    std::vector<bool> visited(n, false);
    std::vector<std::pair<int, int>> out;
    for (int start = 1; start <= n; ++start) {
        if (visited[start - 1]) continue;
        int length = 0;
        int sign = 0;
        int i = start;
        do {
            visited[i - 1] = true;
            sign = (sign + a.signs[i - 1]) % a.r;
            ++length;
            i = a.perm[i - 1];
        } while (i != start);
        out.emplace_back(length, sign);
    }
    return out;
}

ClassIndex cycle_type(const WreathElement& a) {
    std::map<int, std::vector<int>> parts;
    for (const auto& [length, sign] : cycles_with_signs(a)) parts[sign].push_back(length);
    ClassIndex out;
    for (auto& [sign, lengths] : parts) out.set(sign, Partition::from_unsorted(std::move(lengths)));
    return out;
}

std::vector<ClassIndex> enumerate_classes(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("enumerate_classes: need n >= 0, r >= 1");
    std::vector<ClassIndex> out;
    std::vector<int> sizes(r, 0);
    // Size compositions in ascending lexicographic order, g = 0 most significant.
    std::function<void(int, int)> by_sizes = [&](int g, int remaining) {
        if (g == r - 1) {
            sizes[g] = remaining;
            std::vector<std::vector<Partition>> choices(r);
            for (int h = 0; h < r; ++h) choices[h] = enumerate_partitions(sizes[h]);
            ClassIndex current;
            std::function<void(int)> assemble = [&](int h) {
                if (h == r) {
                    out.push_back(current);
                    return;
                }
                for (const Partition& p : choices[h]) {
                    current.set(h, p);
                    assemble(h + 1);
                    current.set(h, Partition());
                }
            };
            assemble(0);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            sizes[g] = k;
            by_sizes(g + 1, remaining - k);
        }
    };
    by_sizes(0, n);
    return out;
}

Integer group_order(int n, int r) {
    return integer_power(Integer(r), n) * factorial(n);
}

Integer class_size(const ClassIndex& lam, int n, int r) {
    if (lam.total_size() != n) throw std::invalid_argument("class_size: |lambda| != n");
    // Centralizer order z = prod_g r^len(lambda(g)) * prod_i i^{m_i} m_i!.
    Integer z = 1;
    for (const auto& [g, p] : lam.entries()) {
        if (g < 0 || g >= r) throw std::invalid_argument("class_size: residue out of range");
        z *= integer_power(Integer(r), p.length());
        std::map<int, int> mult;
        for (int part : p.parts()) ++mult[part];
        for (const auto& [part, m] : mult)
            z *= integer_power(Integer(part), m) * factorial(m);
    }
    return group_order(n, r) / z;
}

WreathElement class_representative(const ClassIndex& lam, int n, int r) {
    if (lam.total_size() != n) throw std::invalid_argument("class_representative: |lambda| != n");
    WreathElement out = identity_element(n, r);
    int next = 1;
    for (const auto& [g, p] : lam.entries()) {
        for (int length : p.parts()) {
            // cycle (next, next+1, ..., next+length-1), sign g on its first index
            for (int j = 0; j < length - 1; ++j) out.perm[next + j - 1] = next + j + 1;
            out.perm[next + length - 2] = next;
            out.signs[next - 1] = g;
            next += length;
        }
    }
    return out;
}

std::vector<WreathElement> all_elements(int n, int r) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<WreathElement> out;
    do {
        std::vector<int> signs(n, 0);
        while (true) {
            WreathElement w;
            w.r = r;
            w.signs = signs;
            w.perm = perm;
            out.push_back(std::move(w));
            int pos = n - 1;
            while (pos >= 0 && signs[pos] == r - 1) signs[pos--] = 0;
            if (pos < 0) break;
            ++signs[pos];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace gsym
