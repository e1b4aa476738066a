/**
 * @file errors.hpp
 * @brief Exception taxonomy shared across the library.
 *
 * ParseError carries an input position for grammar-level diagnostics;
 * SemanticError flags structurally valid input that violates a domain
 * constraint (inadmissible spins, mismatched cap colors, range caps).
 * The CLI maps them to distinct exit codes.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace platjones {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), pos(position) {}
    std::size_t pos;
};

class SemanticError : public std::runtime_error {
public:
    explicit SemanticError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace platjones
