// Textual group specifications:
//   NAME := C<n> | S<n> | A<n> | D<2n> | Q8 | SL(2,3) | SL(2,5) | E<p>^<k>
//   EXPR := NAME ("x" NAME)*
//   PERM := "perm:" cycles[,cycles...]
//   FILE := "table:" path
#pragma once

#include "cellkit/catalog.hpp"
#include "cellkit/config.hpp"
#include "cellkit/errors.hpp"
#include "cellkit/finite_group.hpp"

#include <json.hpp>

#include <fstream>
#include <string>
#include <variant>
#include <vector>

namespace cellkit {

struct GroupSpec {
    struct Product {
        std::vector<std::string> names;  // catalog names, in order
    };
    struct Perm {
        std::size_t degree = 0;
        std::vector<Permutation> generators;
    };
    struct Table {
        std::string path;
    };

    std::string text;
    std::variant<Product, Perm, Table> parsed;
};

namespace detail {

inline bool valid_catalog_name(const std::string& name) {
    if (name == "Q8" || name == "SL(2,3)" || name == "SL(2,5)") return true;
    if (name.size() < 2) return false;
    auto all_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    switch (name[0]) {
        case 'C':
        case 'S':
        case 'A':
        case 'D':
            return all_digits(name.substr(1));
        case 'E': {
            auto caret = name.find('^');
            if (caret == std::string::npos) return false;
            return all_digits(name.substr(1, caret - 1)) && all_digits(name.substr(caret + 1));
        }
        default:
            return false;
    }
}

}  // namespace detail

inline GroupSpec parse_group_spec(const std::string& text) {
    GroupSpec spec;
    spec.text = text;
    if (text.empty()) throw SpecParseError("empty group spec", 0);

    if (text.rfind("perm:", 0) == 0) {
        std::string body = text.substr(5);
        if (body.empty()) throw SpecParseError("expected cycles after 'perm:'", 5);
        GroupSpec::Perm p;
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= body.size(); ++i) {
            if (i == body.size() || body[i] == ',') {
                parts.push_back(body.substr(start, i - start));
                start = i + 1;
            }
        }
        for (const auto& part : parts) p.degree = std::max(p.degree, max_point_in_cycles(part));
        if (p.degree == 0) throw SpecParseError("no points in permutation spec", 5);
        std::size_t offset = 5;
        for (const auto& part : parts) {
            try {
                p.generators.push_back(parse_cycles(part, p.degree));
            } catch (const SpecParseError& e) {
                throw SpecParseError("bad cycle notation", offset + e.offset);
            }
            offset += part.size() + 1;
        }
        spec.parsed = std::move(p);
        return spec;
    }

    if (text.rfind("table:", 0) == 0) {
        std::string path = text.substr(6);
        if (path.empty()) throw SpecParseError("expected path after 'table:'", 6);
        spec.parsed = GroupSpec::Table{path};
        return spec;
    }

    GroupSpec::Product prod;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == 'x') {
            std::string name = text.substr(start, i - start);
            if (!detail::valid_catalog_name(name))
                throw SpecParseError("not a catalog group name: '" + name + "'", start);
            prod.names.push_back(std::move(name));
            start = i + 1;
        }
    }
    spec.parsed = std::move(prod);
    return spec;
}

// Cayley-table JSON: {"order": n, "mul": [[...]], "generators": [...]?,
// "label": "..."?}. Identity must be index 0.
inline FiniteGroup group_from_table_json(const nlohmann::json& j, const std::string& label_fallback) {
    if (!j.is_object() || !j.contains("order") || !j.contains("mul"))
        throw std::invalid_argument("table JSON must have 'order' and 'mul' fields");
    std::size_t n = j.at("order").get<std::size_t>();
    const auto& rows = j.at("mul");
    if (!rows.is_array() || rows.size() != n)
        throw std::invalid_argument("table JSON: 'mul' must be an order x order array");
    std::vector<std::int32_t> mul;
    mul.reserve(n * n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n)
            throw std::invalid_argument("table JSON: 'mul' must be an order x order array");
        for (const auto& v : row) mul.push_back(v.get<std::int32_t>());
    }
    std::vector<std::int32_t> gens;
    if (j.contains("generators"))
        for (const auto& v : j.at("generators")) gens.push_back(v.get<std::int32_t>());
    std::string label = j.value("label", label_fallback);
    return FiniteGroup::from_table(label, n, mul, gens);
}

inline FiniteGroup build_group(const GroupSpec& spec, const RunConfig& cfg = {}) {
    if (const auto* prod = std::get_if<GroupSpec::Product>(&spec.parsed)) {
        FiniteGroup g = catalog(prod->names[0], cfg.max_order);
        for (std::size_t i = 1; i < prod->names.size(); ++i)
            g = direct_product(g, catalog(prod->names[i], cfg.max_order), cfg.max_order);
        return g;
    }
    if (const auto* perm = std::get_if<GroupSpec::Perm>(&spec.parsed)) {
        return FiniteGroup::from_permutations(spec.text, perm->degree, perm->generators,
                                              cfg.max_order);
    }
    const auto& table = std::get<GroupSpec::Table>(spec.parsed);
    std::ifstream in(table.path);
    if (!in) throw std::invalid_argument("cannot open table file: " + table.path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("bad table JSON in " + table.path + ": " + e.what());
    }
    FiniteGroup g = group_from_table_json(j, table.path);
    if (g.order() > cfg.max_order)
        throw BudgetExceeded("table group order exceeds the order cap");
    return g;
}

}  // namespace cellkit
