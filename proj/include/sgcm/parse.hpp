#pragma once

#include <string>

#include "sgcm/polynomial.hpp"

namespace sgcm {

/// Parse a polynomial expression over the given ring.
///
/// Grammar (whitespace insignificant):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' natural)*
///   base   := variable | integer | '(' expr ')' | '-' base
/// '^' binds tightest. Unknown variable names raise InputError with a column
/// position (0-based offset into the expression).
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace sgcm
