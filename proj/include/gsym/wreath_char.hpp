#pragma once

#include "gsym/cyclic.hpp"
#include "gsym/tabloid.hpp"
#include "gsym/wreath.hpp"

#include <map>
#include <vector>

namespace gsym {

/// Exact class function on C_r wr S_n, defined on all of Lambda_n(C_r).
class ClassFunction {
public:
    ClassFunction(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }

    const Cyclotomic& at(const ClassIndex& cls) const;
    void set(const ClassIndex& cls, Cyclotomic value);

    const std::map<ClassIndex, Cyclotomic>& values() const { return values_; }

private:
    int n_;
    int r_;
    std::map<ClassIndex, Cyclotomic> values_;
};

/// theta(w) = #{ i : pi(i) = i and g_i = 0 }, the fixed-point statistic.
int theta(const WreathElement& w);

/// deg chi^lambda = (n! / prod |lambda(g)|!) * prod f^lambda(g).
Integer wreath_degree(const ClassIndex& lam, int n, int r);

/// chi^lambda on the class cls, by transversal induction over S_n/S coset
/// representatives. Values are cached per (n, r, lambda, cls).
Cyclotomic wreath_character_value(const ClassIndex& lam, const ClassIndex& cls, int n, int r);

ClassFunction irreducible_character(const ClassIndex& lam, int n, int r);

struct CharacterTable {
    int n = 0;
    int r = 1;
    std::vector<ClassIndex> labels;   // also the class order
    std::vector<Integer> sizes;       // class sizes
    std::vector<std::vector<Cyclotomic>> values;  // [label][class]
};

/// Refuses when r^n n! > 10^6 or the class count exceeds 400 unless allow_big.
CharacterTable character_table(int n, int r, bool allow_big = false);

/// xi_{H_sigma} by counting fixed sigma-tabloids of class representatives.
ClassFunction permutation_character(const TransitivityType& sig, int n, int r,
                                    bool allow_big = false);

/// <f, g> = (1/|W|) sum_mu |C_mu| f(mu) conj(g(mu)).
Cyclotomic class_function_inner_product(const ClassFunction& f, const ClassFunction& g);

/// <f, chi^lambda>, which must come out a nonnegative rational integer;
/// anything else raises ConsistencyError.
Integer multiplicity(const ClassFunction& f, const ClassIndex& lam);

/// The class function C_k^(1/r)(theta).
ClassFunction charlier_class_function(int k, int n, int r);

} // namespace gsym
