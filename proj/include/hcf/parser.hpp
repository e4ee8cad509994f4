#pragma once

#include "hcf/field.hpp"

#include <string>

namespace hcf {

// Expression grammar for exact inputs:
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | atom
//   atom    := uint | 'i' | 'sqrt' '(' gaussint ')' | '(' expr ')'
//   gaussint: signed Gaussian integer literal such as "2+i" or "-1-3i"
// At most one distinct radicand may appear; radicands that are squares in
// Z[i] demote to their exact principal root.  Syntax errors carry the
// offending position.
FieldElement parse_expr(const std::string& text);

} // namespace hcf
