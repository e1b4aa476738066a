/**
 * @file catalog.cpp
 * @brief Link-catalog loading and path resolution.
 */
#include "platjones/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "platjones/errors.hpp"

#include "json.hpp"

namespace platjones {

std::map<std::string, PlatSpec> loadCatalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open link catalog: " + path, 0);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("invalid catalog JSON: " + std::string(e.what()), e.byte);
    }
    if (!doc.is_object()) {
        throw ParseError("catalog root must be an object of named links", 0);
    }
    std::map<std::string, PlatSpec> catalog;
    for (const auto& [name, entry] : doc.items()) {
        try {
            catalog[name] = platSpecFromJson(entry.dump());
        } catch (const ParseError& e) {
            throw ParseError("catalog entry '" + name + "': " + e.what(), e.pos);
        } catch (const SemanticError& e) {
            throw SemanticError("catalog entry '" + name + "': " + e.what());
        }
    }
    return catalog;
}

std::string catalogPath(const std::string& override_) {
    if (!override_.empty()) {
        return override_;
    }
    if (const char* env = std::getenv("PLATJONES_CATALOG"); env != nullptr && *env != '\0') {
        return env;
    }
    return "data/links.json";
}

}  // namespace platjones
