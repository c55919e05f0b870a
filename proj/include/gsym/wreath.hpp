#pragma once

#include "gsym/partition.hpp"
#include "gsym/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gsym {

/// Element (g, pi) of C_r wr S_n. Permutations are stored as 1-based image
/// sequences: perm[i-1] = pi(i). signs[i-1] = g_i in 0..r-1.
struct WreathElement {
    int r = 1;
    std::vector<int> signs;
    std::vector<int> perm;

    int n() const { return static_cast<int>(perm.size()); }

    bool operator==(const WreathElement&) const = default;
    auto operator<=>(const WreathElement&) const = default;
};

WreathElement identity_element(int n, int r);

/// Validates invariants (perm a bijection on [n], signs in range).
void validate_element(const WreathElement& w, int n, int r);

/// Cycle type / character label: mapping g -> Partition, empty values absent.
class ClassIndex {
public:
    ClassIndex() = default;

    const Partition& at(int g) const;
    void set(int g, Partition p);
    int total_size() const;

    const std::map<int, Partition>& entries() const { return by_element_; }

    bool operator==(const ClassIndex& other) const { return by_element_ == other.by_element_; }
    bool operator!=(const ClassIndex& other) const { return !(*this == other); }
    bool operator<(const ClassIndex& other) const { return by_element_ < other.by_element_; }

private:
    std::map<int, Partition> by_element_;
};

ClassIndex identity_class(int n);
ClassIndex trivial_label(int n);  // lambda(0) = (n)

WreathElement multiply(const WreathElement& a, const WreathElement& b);
WreathElement inverse(const WreathElement& a);

/// Natural action on (c, i) with c a residue mod r and i in [n] (1-based).
std::pair<int, int> act(const WreathElement& a, std::pair<int, int> point);

ClassIndex cycle_type(const WreathElement& a);

/// (length, sign) of each cycle of the permutation part, in discovery order
/// from the smallest moved index.
std::vector<std::pair<int, int>> cycles_with_signs(const WreathElement& a);

/// All of Lambda_n(C_r) in deterministic order.
std::vector<ClassIndex> enumerate_classes(int n, int r);

Integer group_order(int n, int r);
Integer class_size(const ClassIndex& lam, int n, int r);
WreathElement class_representative(const ClassIndex& lam, int n, int r);

/// Every element of C_r wr S_n; deterministic order. Intended for small n.
std::vector<WreathElement> all_elements(int n, int r);

} // namespace gsym
