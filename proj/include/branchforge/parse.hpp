#ifndef BRANCHFORGE_PARSE_HPP
#define BRANCHFORGE_PARSE_HPP

#include <string>
#include <variant>

#include "branchforge/poly.hpp"

namespace branchforge {

struct parse_error : std::runtime_error {
    size_t position;
    parse_error(const std::string& what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

/// Parse an expression over x, y and lambda (alias l) with integer or p/q
/// coefficients and operators + - * ^. The result is a BiPoly when lambda does
/// not occur, otherwise a FamPoly.
std::variant<BiPoly, FamPoly> parse_poly(const std::string& text);

/// Strict variants for call sites that know what they expect.
BiPoly parse_bipoly(const std::string& text);
FamPoly parse_fampoly(const std::string& text);  // accepts lambda-free input too

}  // namespace branchforge

#endif
