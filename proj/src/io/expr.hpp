#pragma once

#include <string_view>

#include "algebra/poly.hpp"

namespace tanlift::io {

/// Parses an infix polynomial over `vars`: + - * ^, parentheses, integer
/// literals, and division by nonzero constants (so 3/4*x is a literal
/// coefficient). Errors are ParseError; `line` and `column` locate the start
/// of `text` in its source.
algebra::Poly parse_poly(std::string_view text, const algebra::VarsPtr& vars, std::size_t line = 1,
                         std::size_t column = 1);

}  // namespace tanlift::io
