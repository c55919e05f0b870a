#include "gsym/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace gsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("Partition: parts must be nonnegative");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    Partition out;
    out.parts_ = std::move(parts);
    return out;
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("Partition::part: index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    const int width = p.part(1);
    cols.reserve(width);
    for (int j = 1; j <= width; ++j) {
        int count = 0;
        for (int part : p.parts())
            if (part >= j) ++count;
        cols.push_back(count);
    }
    return Partition(std::move(cols));
}

bool dominated_by(const Partition& p, const Partition& q) {
    const int len = std::max(p.length(), q.length());
    long long sum_p = 0;
    long long sum_q = 0;
    for (int k = 1; k <= len; ++k) {
        sum_p += p.part(k);
        sum_q += q.part(k);
        if (sum_p > sum_q) return false;
    }
    return true;
}

Partition union_parts(const Partition& p, const Partition& q) {
    std::vector<int> parts;
    parts.reserve(p.length() + q.length());
    parts.insert(parts.end(), p.parts().begin(), p.parts().end());
    parts.insert(parts.end(), q.parts().begin(), q.parts().end());
    return Partition::from_unsorted(std::move(parts));
}

Partition componentwise_sum(const Partition& p, const Partition& q) {
    const int len = std::max(p.length(), q.length());
    std::vector<int> parts(len);
    for (int i = 1; i <= len; ++i) parts[i - 1] = p.part(i) + q.part(i);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

Partition add_at(const Partition& p, int r, int k) {
    if (r < 1) throw std::invalid_argument("add_at: index is 1-based");
    if (k < 0) throw std::invalid_argument("add_at: k must be nonnegative");
    std::vector<int> parts = p.parts();
    if (static_cast<int>(parts.size()) < r) parts.resize(r, 0);
    parts[r - 1] += k;
    return Partition::from_unsorted(std::move(parts));
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> gen = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(Partition(current));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            gen(remaining - part, part);
            current.pop_back();
        }
    };
    gen(n, n);
    return out;
}

} // namespace gsym
