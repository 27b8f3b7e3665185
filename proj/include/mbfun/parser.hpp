#pragma once

#include <string>
#include <string_view>

#include "mbfun/multipoly.hpp"

namespace mbfun {

// Polynomial over Q in the variables that occur in `text` (sorted by name).
// Grammar: integers, p/q literals, names [a-z][a-z0-9]*, + - * / ^ and
// parentheses.  Division is only by nonzero constants; exponents are
// nonnegative integer literals.  Throws SyntaxError with line and column.
MultiPoly parse_poly(std::string_view text);

}  // namespace mbfun
