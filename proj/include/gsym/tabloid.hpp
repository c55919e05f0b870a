#pragma once

#include "gsym/partition.hpp"
#include "gsym/rational.hpp"
#include "gsym/wreath.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace gsym {

/// Element of Sigma_n(C_r): mapping subgroup order (divisor of r) -> Partition.
class TransitivityType {
public:
    TransitivityType() = default;

    const Partition& at(int subgroup_order) const;
    void set(int subgroup_order, Partition p);
    int norm() const;  // total size over all subgroups

    const std::map<int, Partition>& entries() const { return by_subgroup_; }

    bool operator==(const TransitivityType& other) const { return by_subgroup_ == other.by_subgroup_; }
    bool operator!=(const TransitivityType& other) const { return !(*this == other); }
    bool operator<(const TransitivityType& other) const { return by_subgroup_ < other.by_subgroup_; }

private:
    std::map<int, Partition> by_subgroup_;
};

/// Shape (sigma, rho) of a simple type: values at the trivial and full subgroup.
struct DoubleShape {
    Partition sigma;
    Partition rho;
};

/// by_subgroup(1) = sigma, by_subgroup(r) = rho, empty elsewhere.
/// For r = 1 requires rho empty.
TransitivityType make_simple(const DoubleShape& shape, int n, int r);

/// Parabolic type: shape (sigma, (k)). For r = 1 the trivial and full
/// subgroup coincide, so the row (k) joins sigma.
TransitivityType make_parabolic(const Partition& sigma, int k, int n, int r);

/// |H_sigma| = prod over subgroups U and parts k of |U|^k * k!.
Integer stabilizer_order(const TransitivityType& sig, int n, int r);

/// Number of sigma-tabloids, |W| / |H_sigma|.
Integer tabloid_count(const TransitivityType& sig, int n, int r);

/// All types in Sigma_n(C_r), deterministic order.
std::vector<TransitivityType> enumerate_types(int n, int r);

/// One row of a tabloid: the cells are (coset representative, index) pairs,
/// kept sorted by index; coset representatives are reduced mod r/d.
struct TabloidRow {
    int subgroup_order = 1;
    std::vector<std::pair<int, int>> cells;

    bool operator==(const TabloidRow&) const = default;
    auto operator<=>(const TabloidRow&) const = default;
};

/// Rows are fixed slots: subgroups ascending by order, parts in partition
/// order. Row-equivalence matches rows slot by slot, so equality of canonical
/// forms is plain value comparison.
struct Tabloid {
    std::vector<TabloidRow> rows;

    bool operator==(const Tabloid&) const = default;
    auto operator<=>(const Tabloid&) const = default;
};

/// Refuses (ScaleGuardError) when the count exceeds 10^5 unless allow_big.
std::vector<Tabloid> enumerate_tabloids(const TransitivityType& sig, int n, int r,
                                        bool allow_big = false);

Tabloid act_on_tabloid(const WreathElement& w, const Tabloid& tab);

/// The unique c with |{y in Y : yT1 = T2}| = c for all tabloid pairs, when it
/// exists.
std::optional<Integer> transitivity_index(const std::vector<WreathElement>& Y,
                                          const TransitivityType& sig, int n, int r,
                                          bool allow_big = false);

/// Definition-level clique oracle: no quotient of distinct elements fixes a
/// sigma-tabloid.
bool is_clique_direct(const std::vector<WreathElement>& Y, const TransitivityType& sig, int n,
                      int r, bool allow_big = false);

} // namespace gsym
