#pragma once

#include "gsym/cyclic.hpp"
#include "gsym/tabloid.hpp"
#include "gsym/wreath.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gsym {

// JSON conventions: partitions are arrays of ints ([] for empty); rationals
// are exact strings "num/den" (denominator 1 prints as a plain integer);
// permutations are 0-based image arrays at the boundary, 1-based inside.

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClassIndex& lam);
ClassIndex class_index_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TransitivityType& sig);
TransitivityType type_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WreathElement& w);
WreathElement element_from_json(const nlohmann::json& j, int n, int r);

/// Subset file: JSON array of element objects, validated against (n, r),
/// duplicates rejected.
std::vector<WreathElement> read_subset_file(const std::string& path, int n, int r);
void write_subset_file(const std::string& path, const std::vector<WreathElement>& elements);

} // namespace gsym
