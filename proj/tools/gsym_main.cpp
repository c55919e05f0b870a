#include "gsym/arrow.hpp"
#include "gsym/charlier.hpp"
#include "gsym/constructions.hpp"
#include "gsym/errors.hpp"
#include "gsym/json_io.hpp"
#include "gsym/parallel.hpp"
#include "gsym/scheme.hpp"
#include "gsym/tabloid.hpp"
#include "gsym/wreath_char.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <set>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr long long kDirectGuard = 100000;

json parse_json_arg(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception&) {
        throw std::invalid_argument(std::string(what) + ": cannot parse JSON '" + text + "'");
    }
}

int run_classes(int n, int r) {
    json out = json::array();
    for (const auto& cls : gsym::enumerate_classes(n, r))
        out.push_back({{"index", gsym::to_json(cls)}, {"size", gsym::class_size(cls, n, r).str()}});
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_chartable(int n, int r, bool allow_big) {
    const auto table = gsym::character_table(n, r, allow_big);
    json classes = json::array();
    for (const auto& cls : table.labels) classes.push_back(gsym::to_json(cls));
    json rows = json::array();
    for (std::size_t i = 0; i < table.labels.size(); ++i) {
        json values = json::array();
        for (const auto& value : table.values[i]) values.push_back(gsym::to_json(value));
        rows.push_back({{"label", gsym::to_json(table.labels[i])},
                        {"degree", gsym::wreath_degree(table.labels[i], n, r).str()},
                        {"values", values}});
    }
    json out{{"n", n}, {"r", r}, {"classes", classes}, {"rows", rows}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_decompose(int n, int r, const std::string& sigma_text, bool allow_big) {
    const auto sig = gsym::type_from_json(parse_json_arg(sigma_text, "--sigma"));
    const auto xi = gsym::permutation_character(sig, n, r, allow_big);
    json mults = json::array();
    for (const auto& lam : gsym::enumerate_classes(n, r))
        mults.push_back({{"lambda", gsym::to_json(lam)},
                         {"multiplicity", gsym::multiplicity(xi, lam).str()}});
    json out{{"n", n}, {"r", r}, {"sigma", gsym::to_json(sig)}, {"multiplicities", mults}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_arrow(int n, int r, const std::string& sigma_text, const std::string& lambda_text) {
    const auto sig = gsym::type_from_json(parse_json_arg(sigma_text, "--sigma"));
    const auto lam = gsym::class_index_from_json(parse_json_arg(lambda_text, "--lambda"));
    const bool holds = gsym::arrow(sig, lam, n, r);
    json out{{"n", n},
             {"r", r},
             {"sigma", gsym::to_json(sig)},
             {"lambda", gsym::to_json(lam)},
             {"arrow", holds}};
    std::cout << out.dump(2) << "\n";
    return holds ? 0 : 1;
}

int run_mset(int n, int r, const std::string& sigma_text) {
    const auto sig = gsym::type_from_json(parse_json_arg(sigma_text, "--sigma"));
    json out = json::array();
    for (const auto& lam : gsym::m_set(sig, n, r)) out.push_back(gsym::to_json(lam));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_compare(int n, int r, const std::string& a_text, const std::string& b_text) {
    const auto a = gsym::type_from_json(parse_json_arg(a_text, "--a"));
    const auto b = gsym::type_from_json(parse_json_arg(b_text, "--b"));
    const bool holds = gsym::succeq(a, b, n, r);
    json out{{"n", n}, {"r", r}, {"a", gsym::to_json(a)}, {"b", gsym::to_json(b)},
             {"succeq", holds}};
    std::cout << out.dump(2) << "\n";
    return holds ? 0 : 1;
}

int run_check(int n, int r, const std::string& sigma_text, const std::string& set_path,
              const std::string& mode, bool allow_big) {
    const auto sig = gsym::type_from_json(parse_json_arg(sigma_text, "--sigma"));
    const auto Y = gsym::read_subset_file(set_path, n, r);
    const auto report = gsym::clique_design_bounds(Y, sig, n, r);

    const bool direct_feasible = allow_big || gsym::tabloid_count(sig, n, r) <= kDirectGuard;
    json design{{"scheme", report.design}};
    json clique{{"scheme", report.clique}};
    if (direct_feasible) {
        const auto index = gsym::transitivity_index(Y, sig, n, r, allow_big);
        design["direct"] = index.has_value();
        design["index"] = index.has_value() ? json(index->str()) : json(nullptr);
        clique["direct"] = gsym::is_clique_direct(Y, sig, n, r, allow_big);
        if (report.design != index.has_value() || report.clique != clique["direct"].get<bool>())
            throw gsym::ConsistencyError("check: scheme and direct verdicts disagree");
    } else {
        design["direct"] = nullptr;
        design["index"] = nullptr;
        clique["direct"] = nullptr;
    }

    json out{{"n", n},
             {"r", r},
             {"sigma", gsym::to_json(sig)},
             {"subset_size", static_cast<long long>(Y.size())},
             {"design", design},
             {"clique", clique},
             {"bounds",
              {{"coset_count", report.coset_count.str()},
               {"clique_bound_holds", report.clique_bound_holds},
               {"design_bound_holds", report.design_bound_holds},
               {"equality", report.equality},
               {"sharp", report.sharp}}}};
    std::cout << out.dump(2) << "\n";

    bool verdict = true;
    if (mode == "design") verdict = report.design;
    else if (mode == "clique") verdict = report.clique;
    else verdict = report.design && report.clique;
    return verdict ? 0 : 1;
}

int run_profile(int n, int r, const std::string& set_path) {
    const auto Y = gsym::read_subset_file(set_path, n, r);
    const auto dist = gsym::distance_distribution(Y, n, r);
    const int t = gsym::max_design_strength(Y, n, r);
    const auto dmin = gsym::min_nonzero_distance(Y, n, r);
    const auto bounds = gsym::design_code_bounds(n, r, t, dmin.d);

    json A = json::array();
    json Adual = json::array();
    for (const auto& a : dist.A) A.push_back(gsym::to_json(a));
    for (const auto& a : dist.Adual) Adual.push_back(gsym::to_json(a));

    const gsym::Integer size(static_cast<long long>(Y.size()));
    json out{{"n", n},
             {"r", r},
             {"subset_size", static_cast<long long>(Y.size())},
             {"A", A},
             {"Adual", Adual},
             {"t", t},
             {"d", dmin.d},
             {"no_pairs", dmin.no_pairs},
             {"bounds", {{"lower", bounds.first.str()}, {"upper", bounds.second.str()}}},
             {"sharp", size == bounds.first || size == bounds.second}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_construct_agl(int q, const std::string& out_path) {
    const auto perms = gsym::agl1(q);
    gsym::write_subset_file(out_path, gsym::as_wreath_elements(perms, 1));
    json out{{"kind", "agl"},
             {"q", q},
             {"size", static_cast<long long>(perms.size())},
             {"out", out_path}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_construct_oa(int n, int r, int strength, const std::string& out_path) {
    gsym::OrthogonalArray oa;
    if (n == r + 1 && strength == 2)
        oa = gsym::extended_rs_orthogonal_array(r);
    else
        oa = gsym::rs_orthogonal_array(n, r, strength);
    if (!gsym::verify_oa_strength(oa))
        throw gsym::ConsistencyError("construct oa: strength verification failed");
    json rows = json::array();
    for (const auto& row : oa.rows) rows.push_back(row);
    json doc{{"n", oa.n}, {"r", oa.r}, {"strength", oa.strength}, {"rows", rows}};
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot write " + out_path);
    file << doc.dump(2) << "\n";
    json out{{"kind", "oa"},
             {"n", oa.n},
             {"r", oa.r},
             {"strength", oa.strength},
             {"size", static_cast<long long>(oa.rows.size())},
             {"index", oa.index().str()},
             {"out", out_path}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_construct_product(const std::string& oa_path, const std::string& design_path,
                          const std::string& out_path) {
    std::ifstream file(oa_path);
    if (!file) throw std::invalid_argument("cannot open " + oa_path);
    json doc;
    file >> doc;
    gsym::OrthogonalArray oa;
    oa.n = doc.at("n").get<int>();
    oa.r = doc.at("r").get<int>();
    oa.strength = doc.at("strength").get<int>();
    for (const auto& row : doc.at("rows")) oa.rows.push_back(row.get<std::vector<int>>());

    const auto design = gsym::read_subset_file(design_path, oa.n, 1);
    std::vector<std::vector<int>> perms;
    perms.reserve(design.size());
    for (const auto& w : design) perms.push_back(w.perm);

    const auto product = gsym::product_design(oa, perms);
    gsym::write_subset_file(out_path, product);
    json out{{"kind", "product"},
             {"n", oa.n},
             {"r", oa.r},
             {"size", static_cast<long long>(product.size())},
             {"out", out_path}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_plane_gate(int n, bool allow_big) {
    const auto report = gsym::plane_gate(n, allow_big);
    json out{{"n", report.n},
             {"sn_design_available", report.sn_design_available},
             {"oa_available", report.oa_available},
             {"product_size",
              report.product_size ? json(report.product_size->str()) : json(nullptr)},
             {"verified", report.verified},
             {"status", report.status}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_poset(int n, int r, bool as_json) {
    const auto types = gsym::enumerate_types(n, r);
    // group types by identical M sets
    std::vector<std::set<gsym::ClassIndex>> msets;
    msets.reserve(types.size());
    for (const auto& sig : types) {
        const auto& ms = gsym::m_set(sig, n, r);
        msets.emplace_back(ms.begin(), ms.end());
    }
    std::vector<int> node_of(types.size(), -1);
    std::vector<std::vector<std::size_t>> members;
    std::vector<const std::set<gsym::ClassIndex>*> node_sets;
    for (std::size_t i = 0; i < types.size(); ++i) {
        for (std::size_t node = 0; node < node_sets.size(); ++node)
            if (*node_sets[node] == msets[i]) {
                node_of[i] = static_cast<int>(node);
                members[node].push_back(i);
                break;
            }
        if (node_of[i] < 0) {
            node_of[i] = static_cast<int>(node_sets.size());
            node_sets.push_back(&msets[i]);
            members.push_back({i});
        }
    }
    const std::size_t count = node_sets.size();
    auto strictly_above = [&](std::size_t a, std::size_t b) {
        return *node_sets[a] != *node_sets[b] &&
               std::includes(node_sets[a]->begin(), node_sets[a]->end(), node_sets[b]->begin(),
                             node_sets[b]->end());
    };
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            if (!strictly_above(a, b)) continue;
            bool covered = true;
            for (std::size_t mid = 0; mid < count && covered; ++mid)
                if (mid != a && mid != b && strictly_above(a, mid) && strictly_above(mid, b))
                    covered = false;
            if (covered) edges.emplace_back(a, b);
        }
    }

    if (as_json) {
        json nodes = json::array();
        for (std::size_t node = 0; node < count; ++node) {
            json list = json::array();
            for (std::size_t i : members[node]) list.push_back(gsym::to_json(types[i]));
            nodes.push_back({{"id", node}, {"types", list}});
        }
        json edge_list = json::array();
        for (const auto& [a, b] : edges) edge_list.push_back({a, b});
        json out{{"n", n}, {"r", r}, {"nodes", nodes}, {"edges", edge_list}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "digraph succeq {\n";
    std::cout << "  rankdir=TB;\n";
    for (std::size_t node = 0; node < count; ++node) {
        std::string label;
        for (std::size_t i : members[node]) {
            if (!label.empty()) label += "\\n";
            std::string text = gsym::to_json(types[i]).dump();
            std::string escaped;
            for (char ch : text) {
                if (ch == '"') escaped += "\\\"";
                else escaped += ch;
            }
            label += escaped;
        }
        std::cout << "  t" << node << " [label=\"" << label << "\"];\n";
    }
    for (const auto& [a, b] : edges) std::cout << "  t" << a << " -> t" << b << ";\n";
    std::cout << "}\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gsym: exact computations with transitive subsets of C_r wr S_n"};
    app.require_subcommand(1);

    int jobs = 1;
    app.add_option("--jobs", jobs, "worker cap for parallel loops")->capture_default_str();

    int n = 1;
    int r = 1;
    bool allow_big = false;
    std::string sigma_text, lambda_text, a_text, b_text, set_path, out_path;
    std::string mode = "both";
    bool as_json = false;

    auto* classes = app.add_subcommand("classes", "list the conjugacy classes of C_r wr S_n");
    classes->add_option("-n", n)->required();
    classes->add_option("-r", r)->required();

    auto* chartable = app.add_subcommand("chartable", "full character table");
    chartable->add_option("-n", n)->required();
    chartable->add_option("-r", r)->required();
    chartable->add_flag("--allow-big", allow_big, "lift the desk-scale guard");
    chartable->add_flag("--json", as_json, "JSON output (default)");

    auto* decompose = app.add_subcommand("decompose", "multiplicities of a permutation character");
    decompose->add_option("-n", n)->required();
    decompose->add_option("-r", r)->required();
    decompose->add_option("--sigma", sigma_text, "transitivity type JSON")->required();
    decompose->add_flag("--allow-big", allow_big);

    auto* arrow_cmd = app.add_subcommand("arrow", "decide sigma -> lambda");
    arrow_cmd->add_option("-n", n)->required();
    arrow_cmd->add_option("-r", r)->required();
    arrow_cmd->add_option("--sigma", sigma_text)->required();
    arrow_cmd->add_option("--lambda", lambda_text)->required();

    auto* mset_cmd = app.add_subcommand("mset", "the set M_sigma");
    mset_cmd->add_option("-n", n)->required();
    mset_cmd->add_option("-r", r)->required();
    mset_cmd->add_option("--sigma", sigma_text)->required();

    auto* compare = app.add_subcommand("compare", "decide sigma >= tau");
    compare->add_option("-n", n)->required();
    compare->add_option("-r", r)->required();
    compare->add_option("--a", a_text, "left type JSON")->required();
    compare->add_option("--b", b_text, "right type JSON")->required();

    auto* check = app.add_subcommand("check", "design/clique verdicts for a subset file");
    check->add_option("-n", n)->required();
    check->add_option("-r", r)->required();
    check->add_option("--sigma", sigma_text)->required();
    check->add_option("--set", set_path, "subset file")->required()->check(CLI::ExistingFile);
    check->add_option("--mode", mode)->check(CLI::IsMember({"design", "clique", "both"}));
    check->add_flag("--allow-big", allow_big);

    auto* profile = app.add_subcommand("profile", "distance profile, strength and bounds");
    profile->add_option("-n", n)->required();
    profile->add_option("-r", r)->required();
    profile->add_option("--set", set_path)->required()->check(CLI::ExistingFile);

    auto* construct = app.add_subcommand("construct", "build designs and orthogonal arrays");
    std::string kind;
    int q = 0;
    int strength = 0;
    std::string oa_path, design_path;
    construct->add_option("--kind", kind)->required()->check(CLI::IsMember({"agl", "oa", "product"}));
    construct->add_option("--q", q, "field order for agl");
    construct->add_option("-n", n);
    construct->add_option("-r", r);
    construct->add_option("--strength", strength, "orthogonal array strength");
    construct->add_option("--oa", oa_path, "orthogonal array file for product");
    construct->add_option("--design", design_path, "S_n subset file for product");
    construct->add_option("--out", out_path, "output path")->required();

    auto* plane = app.add_subcommand("plane-gate", "projective-plane construction gate report");
    plane->add_option("-n", n)->required();
    plane->add_flag("--allow-big", allow_big);

    auto* poset = app.add_subcommand("poset", "Hasse diagram of the succeq preorder");
    poset->add_option("-n", n)->required();
    poset->add_option("-r", r)->required();
    bool want_dot = false;
    poset->add_flag("--dot", want_dot, "DOT output (default)");
    poset->add_flag("--json", as_json, "JSON output instead of DOT");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    gsym::set_worker_count(jobs);

    try {
        if (classes->parsed()) return run_classes(n, r);
        if (chartable->parsed()) return run_chartable(n, r, allow_big);
        if (decompose->parsed()) return run_decompose(n, r, sigma_text, allow_big);
        if (arrow_cmd->parsed()) return run_arrow(n, r, sigma_text, lambda_text);
        if (mset_cmd->parsed()) return run_mset(n, r, sigma_text);
        if (compare->parsed()) return run_compare(n, r, a_text, b_text);
        if (check->parsed()) return run_check(n, r, sigma_text, set_path, mode, allow_big);
        if (profile->parsed()) return run_profile(n, r, set_path);
        if (construct->parsed()) {
            if (kind == "agl") {
                if (q < 2) throw std::invalid_argument("construct agl: --q required");
                return run_construct_agl(q, out_path);
            }
            if (kind == "oa") {
                if (strength < 1) throw std::invalid_argument("construct oa: --strength required");
                return run_construct_oa(n, r, strength, out_path);
            }
            if (oa_path.empty() || design_path.empty())
                throw std::invalid_argument("construct product: --oa and --design required");
            return run_construct_product(oa_path, design_path, out_path);
        }
        if (plane->parsed()) return run_plane_gate(n, allow_big);
        if (poset->parsed()) return run_poset(n, r, as_json);
        return 2;
    } catch (const gsym::ConsistencyError& e) {
        std::cerr << "consistency error: " << e.what() << "\n";
        return 3;
    } catch (const gsym::ScaleGuardError& e) {
        std::cerr << "scale guard: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
