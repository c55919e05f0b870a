#pragma once

#include "gsym/fields.hpp"
#include "gsym/rational.hpp"
#include "gsym/wreath.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gsym {

struct OrthogonalArray {
    int n = 0;         // columns
    int r = 1;         // symbols
    int strength = 0;  // t
    std::vector<std::vector<int>> rows;

    Integer index() const;
};

/// The q(q-1) affine maps x -> ax + b over GF(q) as permutations of [q]
/// (field elements in encoding order), a sharply 2-transitive set.
std::vector<std::vector<int>> agl1(int q);

/// Wraps 1-based permutations of [n] as sign-free elements of C_r wr S_n.
std::vector<WreathElement> as_wreath_elements(const std::vector<std::vector<int>>& perms, int r);

/// Reed-Solomon orthogonal array: evaluations of all polynomials of degree
/// < t over GF(r) at n fixed points. Strength t, index 1. Needs t <= n <= r.
OrthogonalArray rs_orthogonal_array(int n, int r, int t);

/// One-point extension: r+1 columns over GF(r), strength 2, index 1
/// (evaluations of linear polynomials plus their leading coefficient).
OrthogonalArray extended_rs_orthogonal_array(int r);

/// Exhaustive strength check over every t-column projection.
bool verify_oa_strength(const OrthogonalArray& oa);

/// {(g, y) : g in D, y in Yp} in C_r wr S_n.
std::vector<WreathElement> product_design(const OrthogonalArray& D,
                                          const std::vector<std::vector<int>>& Yp);

struct PlaneGateReport {
    int n = 0;
    bool sn_design_available = false;   // sharply 2-transitive set in S_n
    bool oa_available = false;          // strength-2 index-1 OA in H(n, n-1)
    std::optional<Integer> product_size;
    bool verified = false;              // product verified sharply 2-transitive
    std::string status;
};

/// Projective-plane gate: builds both ingredients when available, assembles the
/// 2-design of index 1 in C_(n-1) wr S_n, and verifies it directly when the
/// tabloid space is desk-sized. Never claims nonexistence.
PlaneGateReport plane_gate(int n, bool allow_big = false);

} // namespace gsym
