#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "burnside/fincat.hpp"

namespace burnside {

/// Raised for malformed category files: bad JSON, schema violations,
/// unresolved names. Semantic category defects are not errors here; they
/// surface through validate_category.
struct CatFileError : std::runtime_error {
    explicit CatFileError(const std::string& what) : std::runtime_error(what) {}
};

struct ParsedCatFile {
    FinCat cat;
    std::optional<FactorizationSystem> fs;
};

namespace detail {

inline const nlohmann::json& require_key(const nlohmann::json& obj, const char* key,
                                         const char* context) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw CatFileError(std::string(context) + ": missing key \"" + key + "\"");
    return *it;
}

inline std::string require_string(const nlohmann::json& v, const std::string& context) {
    if (!v.is_string()) throw CatFileError(context + " must be a string");
    return v.get<std::string>();
}

inline FactorizationSystem parse_classes(const FinCat& cat, const nlohmann::json& epis,
                                         const nlohmann::json& monos) {
    if (!epis.is_array() || !monos.is_array())
        throw CatFileError("\"epis\" and \"monos\" must be arrays of morphism names");
    FactorizationSystem fs;
    fs.epis.assign(cat.morphism_count(), 0);
    fs.monos.assign(cat.morphism_count(), 0);
    auto mark = [&](const nlohmann::json& list, std::vector<char>& flags, const char* which) {
        for (const auto& entry : list) {
            std::string nm = require_string(entry, std::string("entry of \"") + which + "\"");
            int id = cat.morphism_id(nm);
            if (id < 0)
                throw CatFileError(std::string(which) + " references unknown morphism: " + nm);
            flags[id] = 1;
        }
    };
    mark(epis, fs.epis, "epis");
    mark(monos, fs.monos, "monos");
    // identities are implicit in the file and belong to every wide subcategory
    for (int c = 0; c < static_cast<int>(cat.object_count()); ++c) {
        fs.epis[cat.identity_of(c)] = 1;
        fs.monos[cat.identity_of(c)] = 1;
    }
    return fs;
}

}  // namespace detail

/// Parses the JSON category format. Keys: name, objects, morphisms (name/src/
/// dst records), compose ("outer|inner" -> result), optional epis/monos.
/// Identities are implicit and named "id:<object>"; compose entries involving
/// them are rejected. Composition gaps and non-composable entries are left for
/// validate_category to report.
inline ParsedCatFile parse_catfile(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CatFileError(std::string("JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw CatFileError("category file must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "name" && key != "objects" && key != "morphisms" && key != "compose" &&
            key != "epis" && key != "monos")
            throw CatFileError("unknown key: \"" + key + "\"");
    }

    ParsedCatFile result;
    FinCat& cat = result.cat;
    cat.name = detail::require_string(detail::require_key(doc, "name", "category file"),
                                      "\"name\"");

    const auto& objects = detail::require_key(doc, "objects", "category file");
    if (!objects.is_array()) throw CatFileError("\"objects\" must be an array");
    for (const auto& entry : objects) {
        std::string label = detail::require_string(entry, "object label");
        if (cat.object_id(label) >= 0) throw CatFileError("duplicate object: " + label);
        cat.add_object(label);
    }

    const auto& morphisms = detail::require_key(doc, "morphisms", "category file");
    if (!morphisms.is_array()) throw CatFileError("\"morphisms\" must be an array");
    for (const auto& entry : morphisms) {
        if (!entry.is_object()) throw CatFileError("morphism entries must be objects");
        for (const auto& [key, value] : entry.items()) {
            (void)value;
            if (key != "name" && key != "src" && key != "dst")
                throw CatFileError("unknown morphism key: \"" + key + "\"");
        }
        std::string nm = detail::require_string(
            detail::require_key(entry, "name", "morphism"), "morphism name");
        if (nm.rfind("id:", 0) == 0)
            throw CatFileError("morphism name uses the reserved id prefix: " + nm);
        if (nm.find('|') != std::string::npos)
            throw CatFileError("morphism name must not contain '|': " + nm);
        if (cat.morphism_id(nm) >= 0) throw CatFileError("duplicate morphism: " + nm);
        std::string src = detail::require_string(
            detail::require_key(entry, "src", "morphism"), "morphism src");
        std::string dst = detail::require_string(
            detail::require_key(entry, "dst", "morphism"), "morphism dst");
        int src_id = cat.object_id(src), dst_id = cat.object_id(dst);
        if (src_id < 0) throw CatFileError("morphism " + nm + " has unknown src: " + src);
        if (dst_id < 0) throw CatFileError("morphism " + nm + " has unknown dst: " + dst);
        cat.add_morphism(nm, src_id, dst_id);
    }

    std::vector<int> identity_ids;
    for (int c = 0; c < static_cast<int>(cat.object_count()); ++c) {
        std::string nm = "id:" + cat.object_label(c);
        identity_ids.push_back(cat.add_morphism(nm, c, c));
    }
    cat.finalize();
    for (int c = 0; c < static_cast<int>(cat.object_count()); ++c)
        cat.set_identity(c, identity_ids[c]);
    for (int f = 0; f < static_cast<int>(cat.morphism_count()); ++f) {
        const auto& m = cat.morphism(f);
        cat.set_compose(f, cat.identity_of(m.src), f);
        cat.set_compose(cat.identity_of(m.dst), f, f);
    }

    const auto& compose = detail::require_key(doc, "compose", "category file");
    if (!compose.is_object()) throw CatFileError("\"compose\" must be an object");
    for (const auto& [key, value] : compose.items()) {
        auto bar = key.find('|');
        if (bar == std::string::npos)
            throw CatFileError("compose key must be \"outer|inner\": " + key);
        std::string outer_name = key.substr(0, bar);
        std::string inner_name = key.substr(bar + 1);
        int outer = cat.morphism_id(outer_name);
        int inner = cat.morphism_id(inner_name);
        if (outer < 0)
            throw CatFileError("compose references unknown morphism: " + outer_name);
        if (inner < 0)
            throw CatFileError("compose references unknown morphism: " + inner_name);
        if (cat.is_identity(outer) || cat.is_identity(inner))
            throw CatFileError("compose entries involving identities are forbidden: " + key);
        int target = cat.morphism_id(detail::require_string(value, "compose value"));
        if (target < 0)
            throw CatFileError("compose result is an unknown morphism: " +
                               value.get<std::string>());
        if (!cat.composable(outer, inner)) {
            cat.construction_notes.push_back("compose entry for non-composable pair: " + key);
            continue;
        }
        cat.set_compose(outer, inner, target);
    }

    bool has_epis = doc.contains("epis"), has_monos = doc.contains("monos");
    if (has_epis != has_monos)
        throw CatFileError("\"epis\" and \"monos\" must be given together");
    if (has_epis)
        result.fs = detail::parse_classes(cat, doc["epis"], doc["monos"]);
    return result;
}

/// Serializes back to the file format: identities and their compositions are
/// left implicit. Explicit factorization classes are written only when given.
inline std::string serialize_catfile(const FinCat& cat,
                                     const FactorizationSystem* fs = nullptr) {
    nlohmann::ordered_json doc;
    doc["name"] = cat.name;
    auto objects = nlohmann::ordered_json::array();
    for (int c = 0; c < static_cast<int>(cat.object_count()); ++c)
        objects.push_back(cat.object_label(c));
    doc["objects"] = std::move(objects);

    auto morphisms = nlohmann::ordered_json::array();
    for (int f = 0; f < static_cast<int>(cat.morphism_count()); ++f) {
        if (cat.is_identity(f)) continue;
        const auto& m = cat.morphism(f);
        morphisms.push_back({{"name", m.name},
                             {"src", cat.object_label(m.src)},
                             {"dst", cat.object_label(m.dst)}});
    }
    doc["morphisms"] = std::move(morphisms);

    auto compose = nlohmann::ordered_json::object();
    for (int g = 0; g < static_cast<int>(cat.morphism_count()); ++g) {
        if (cat.is_identity(g)) continue;
        for (int f : cat.to_object(cat.morphism(g).src)) {
            if (cat.is_identity(f)) continue;
            int gf = cat.compose(g, f);
            if (gf < 0) continue;
            compose[cat.morphism(g).name + "|" + cat.morphism(f).name] =
                cat.morphism(gf).name;
        }
    }
    doc["compose"] = std::move(compose);

    if (fs) {
        auto epis = nlohmann::ordered_json::array();
        auto monos = nlohmann::ordered_json::array();
        for (int f = 0; f < static_cast<int>(cat.morphism_count()); ++f) {
            if (cat.is_identity(f)) continue;
            if (fs->epis[f]) epis.push_back(cat.morphism(f).name);
            if (fs->monos[f]) monos.push_back(cat.morphism(f).name);
        }
        doc["epis"] = std::move(epis);
        doc["monos"] = std::move(monos);
    }
    return doc.dump(2) + "\n";
}

}  // namespace burnside
