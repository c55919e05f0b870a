#pragma once

#include <compare>
#include <vector>

namespace gsym {

/// Integer partition: weakly decreasing positive parts, no stored zeros.
/// The empty partition represents the unique partition of 0.
class Partition {
public:
    Partition() = default;

    /// Requires parts already weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    /// Sorts decreasingly and drops zeros; negative parts are rejected.
    static Partition from_unsorted(std::vector<int> parts);

    int size() const;                       // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; indices beyond the length read as 0.
    int part(int i) const;

    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

/// Prefix-sum dominance; sizes may differ.
bool dominated_by(const Partition& p, const Partition& q);

/// Multiset union of parts.
Partition union_parts(const Partition& p, const Partition& q);

Partition componentwise_sum(const Partition& p, const Partition& q);

/// The partition p +_r k: add k to the r-th part (zero-padded), re-sort.
Partition add_at(const Partition& p, int r, int k);

/// All partitions of n in decreasing lexicographic order; count is p(n).
std::vector<Partition> enumerate_partitions(int n);

} // namespace gsym
