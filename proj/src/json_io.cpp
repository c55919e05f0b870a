#include "gsym/json_io.hpp"

#include "gsym/errors.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace gsym {

nlohmann::json to_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected a JSON array");
    std::vector<int> parts;
    for (const auto& entry : j) {
        if (!entry.is_number_integer()) throw std::invalid_argument("partition: parts must be integers");
        parts.push_back(entry.get<int>());
    }
    return Partition(std::move(parts));
}

nlohmann::json to_json(const Rational& q) {
    return rational_to_string(q);
}

Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational: expected a string \"num/den\"");
    return rational_from_string(j.get<std::string>());
}

nlohmann::json to_json(const Cyclotomic& c) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Rational& q : c.coefficients()) coeffs.push_back(rational_to_string(q));
    return nlohmann::json{{"r", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
    const int r = j.at("r").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& entry : j.at("coeffs")) coeffs.push_back(rational_from_json(entry));
    return Cyclotomic::from_coefficients(r, std::move(coeffs));
}

nlohmann::json to_json(const ClassIndex& lam) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [g, p] : lam.entries()) out[std::to_string(g)] = to_json(p);
    return out;
}

ClassIndex class_index_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("class index: expected a JSON object");
    ClassIndex out;
    for (const auto& [key, value] : j.items()) {
        const int g = std::stoi(key);
        if (g < 0) throw std::invalid_argument("class index: negative residue key");
        out.set(g, partition_from_json(value));
    }
    return out;
}

nlohmann::json to_json(const TransitivityType& sig) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [d, p] : sig.entries()) out[std::to_string(d)] = to_json(p);
    return out;
}

TransitivityType type_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("transitivity type: expected a JSON object");
    TransitivityType out;
    for (const auto& [key, value] : j.items()) {
        const int d = std::stoi(key);
        if (d < 1) throw std::invalid_argument("transitivity type: keys are subgroup orders");
        out.set(d, partition_from_json(value));
    }
    return out;
}

nlohmann::json to_json(const WreathElement& w) {
    std::vector<int> perm0(w.perm.size());
    for (std::size_t i = 0; i < w.perm.size(); ++i) perm0[i] = w.perm[i] - 1;
    return nlohmann::json{{"signs", w.signs}, {"perm", perm0}};
}

WreathElement element_from_json(const nlohmann::json& j, int n, int r) {
    WreathElement w;
    w.r = r;
    w.signs = j.at("signs").get<std::vector<int>>();
    w.perm = j.at("perm").get<std::vector<int>>();
    for (int& image : w.perm) ++image;  // 0-based on the wire
    validate_element(w, n, r);
    return w;
}

std::vector<WreathElement> read_subset_file(const std::string& path, int n, int r) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open subset file: " + path);
    nlohmann::json j;
    in >> j;
    if (!j.is_array()) throw std::invalid_argument("subset file: expected a JSON array");
    std::vector<WreathElement> out;
    std::set<WreathElement> seen;
    for (const auto& entry : j) {
        WreathElement w = element_from_json(entry, n, r);
        if (!seen.insert(w).second)
            throw std::invalid_argument("subset file: repeated element");
        out.push_back(std::move(w));
    }
    if (out.empty()) throw std::invalid_argument("subset file: empty set");
    return out;
}

void write_subset_file(const std::string& path, const std::vector<WreathElement>& elements) {
    nlohmann::json j = nlohmann::json::array();
    for (const WreathElement& w : elements) j.push_back(to_json(w));
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write subset file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace gsym
