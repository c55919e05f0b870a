#include "gsym/constructions.hpp"

#include "gsym/errors.hpp"
#include "gsym/tabloid.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace gsym {

Integer OrthogonalArray::index() const {
    return Integer(static_cast<long long>(rows.size())) / integer_power(Integer(r), strength);
}

std::vector<std::vector<int>> agl1(int q) {
    const FiniteField field(q);
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(q) * (q - 1));
    for (int a = 1; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            std::vector<int> perm(q);
            for (int x = 0; x < q; ++x) perm[x] = field.add(field.mul(a, x), b) + 1;
            out.push_back(std::move(perm));
        }
    }
    return out;
}

std::vector<WreathElement> as_wreath_elements(const std::vector<std::vector<int>>& perms, int r) {
    std::vector<WreathElement> out;
    out.reserve(perms.size());
    for (const auto& perm : perms) {
        WreathElement w;
        w.r = r;
        w.signs.assign(perm.size(), 0);
        w.perm = perm;
        out.push_back(std::move(w));
    }
    return out;
}

OrthogonalArray rs_orthogonal_array(int n, int r, int t) {
    if (!(1 <= t && t <= n && n <= r))
        throw std::invalid_argument("rs_orthogonal_array: need 1 <= t <= n <= r");
    const FiniteField field(r);
    OrthogonalArray oa;
    oa.n = n;
    oa.r = r;
    oa.strength = t;

    std::vector<int> coeffs(t, 0);
    std::function<void(int)> walk = [&](int pos) {
        if (pos == t) {
            std::vector<int> row(n);
            for (int j = 0; j < n; ++j) {
                // Horner evaluation at the j-th field element
                int value = 0;
                for (int c = t - 1; c >= 0; --c) value = field.add(field.mul(value, j), coeffs[c]);
                row[j] = value;
            }
            oa.rows.push_back(std::move(row));
            return;
        }
        for (int c = 0; c < r; ++c) {
            coeffs[pos] = c;
            walk(pos + 1);
        }
    };
    walk(0);
    return oa;
}

OrthogonalArray extended_rs_orthogonal_array(int r) {
    const FiniteField field(r);
    OrthogonalArray oa;
    oa.n = r + 1;
    oa.r = r;
    oa.strength = 2;
    for (int c0 = 0; c0 < r; ++c0) {
        for (int c1 = 0; c1 < r; ++c1) {
            std::vector<int> row(r + 1);
            for (int x = 0; x < r; ++x) row[x] = field.add(c0, field.mul(c1, x));
            row[r] = c1;
            oa.rows.push_back(std::move(row));
        }
    }
    return oa;
}

bool verify_oa_strength(const OrthogonalArray& oa) {
    if (oa.rows.empty()) return false;
    const Integer expected = oa.index();
    if (expected * integer_power(Integer(oa.r), oa.strength) !=
        Integer(static_cast<long long>(oa.rows.size())))
        return false;

    std::vector<int> columns(oa.strength);
    bool ok = true;
    std::function<void(int, int)> choose = [&](int from, int picked) {
        if (!ok) return;
        if (picked == oa.strength) {
            std::map<std::vector<int>, long long> counts;
            for (const auto& row : oa.rows) {
                std::vector<int> key(oa.strength);
                for (int c = 0; c < oa.strength; ++c) key[c] = row[columns[c]];
                ++counts[key];
            }
            Integer tuples = integer_power(Integer(oa.r), oa.strength);
            if (Integer(static_cast<long long>(counts.size())) != tuples) ok = false;
            for (const auto& [key, count] : counts)
                if (Integer(count) != expected) ok = false;
            return;
        }
        for (int c = from; c < oa.n; ++c) {
            columns[picked] = c;
            choose(c + 1, picked + 1);
        }
    };
    choose(0, 0);
    return ok;
}

std::vector<WreathElement> product_design(const OrthogonalArray& D,
                                          const std::vector<std::vector<int>>& Yp) {
    std::vector<WreathElement> out;
    out.reserve(D.rows.size() * Yp.size());
    for (const auto& signs : D.rows) {
        for (const auto& perm : Yp) {
            if (perm.size() != signs.size())
                throw DimensionError("product_design: permutation degree differs from OA columns");
            WreathElement w;
            w.r = D.r;
            w.signs = signs;
            w.perm = perm;
            out.push_back(std::move(w));
        }
    }
    return out;
}

PlaneGateReport plane_gate(int n, bool allow_big) {
    if (n < 2) throw std::invalid_argument("plane_gate: need n >= 2");
    PlaneGateReport report;
    report.n = n;
    report.sn_design_available = FiniteField::supported(n);
    report.oa_available = FiniteField::supported(n - 1);

    if (!report.sn_design_available || !report.oa_available) {
        report.status = "construction unavailable: ";
        if (!report.sn_design_available)
            report.status += "no sharply 2-transitive set in S_" + std::to_string(n) + " on file";
        if (!report.oa_available) {
            if (!report.sn_design_available) report.status += "; ";
            report.status += "no strength-2 index-1 orthogonal array in H(" + std::to_string(n) +
                             "," + std::to_string(n - 1) + ") on file";
        }
        return report;
    }

    const auto sn_design = agl1(n);
    const auto oa = extended_rs_orthogonal_array(n - 1);
    const auto product = product_design(oa, sn_design);
    report.product_size = Integer(static_cast<long long>(product.size()));

    const int r = n - 1;
    const auto sig = make_parabolic(Partition({1, 1}), n - 2, n, r);
    const Integer tabloids = tabloid_count(sig, n, r);
    if (allow_big || tabloids <= 100000) {
        const auto c = transitivity_index(product, sig, n, r, allow_big);
        report.verified = c.has_value() && *c == 1;
        report.status = report.verified
                            ? "verified: 2-design of index 1 in C_" + std::to_string(r) + " wr S_" +
                                  std::to_string(n) + " of size " + report.product_size->str()
                            : "construction failed verification";
    } else {
        report.status = "constructed (verification skipped: " + tabloids.str() +
                        " tabloids exceed the desk guard)";
    }
    return report;
}

} // namespace gsym
