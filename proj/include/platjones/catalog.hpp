/**
 * @file catalog.hpp
 * @brief Named plat presentations of small links, loaded from a JSON file.
 */
#pragma once

#include <map>
#include <string>

#include "platjones/braid.hpp"

namespace platjones {

/// Loads the link catalog: a JSON object mapping link names to plat
/// descriptions in the PlatSpec format.  Every entry is validated on load.
/// Throws ParseError for unreadable or malformed files and SemanticError
/// for entries violating plat constraints.
std::map<std::string, PlatSpec> loadCatalog(const std::string& path);

/// Resolves the catalog location: the explicit override when non-empty,
/// otherwise the PLATJONES_CATALOG environment variable, otherwise
/// "data/links.json" relative to the working directory.
std::string catalogPath(const std::string& override_ = "");

}  // namespace platjones
