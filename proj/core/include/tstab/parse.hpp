#pragma once

// Object expressions.
//
//   expr := term ('+' term)*
//   term := [nat '*'] atom ['[' int ']']
//   atom := 'O(' int ')' | 'T(' label ',' nat ')' | 'S(' int ',' int ',' label ')' | '0'
//
// Whitespace is ignored between tokens. O and T terms build a P1 object, S
// terms an elliptic one; a single expression may not mix them.

#include <string>
#include <string_view>
#include <variant>

#include "tstab/elliptic_object.hpp"
#include "tstab/p1.hpp"

namespace tstab {

using ParsedObject = std::variant<DerivedObject, EllipticObject>;

/// Throws SyntaxError (with position), InvalidLength for T(x,0), NonCoprime
/// for S classes. "0" alone parses as the zero P1 object.
ParsedObject parse_object(std::string_view text);

/// Throws SyntaxError when the expression contains S terms.
DerivedObject parse_derived(std::string_view text);
/// Throws SyntaxError when the expression contains O or T terms.
EllipticObject parse_elliptic(std::string_view text);

std::string render(const ParsedObject& x);

}  // namespace tstab
