#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cuntz/element.hpp"

namespace cuntz {

// Text grammar shared by rendering and parsing:
//
//   element := "0" | ["-"] term (("+" | "-") term)*
//   term    := [rational] factor* | rational
//   factor  := "I" | "s" index ["*"]
//   index   := digit | "[" digits "]"
//
// Factors multiply left to right, so "s1 s2* s1*" is s1 (s1 s2)*. Rendering
// writes every monomial as its creation letters followed by the starred
// annihilation letters, indices above 9 in brackets and coefficients as p/q.

std::string to_string(const Monomial& m);
std::string to_string(const Element& x);
std::string to_string(const Coefficient& c);

std::ostream& operator<<(std::ostream& os, const Element& x);

/// Throws ParseError on malformed input and IndexOutOfRange for letters > d.
Element parse_element(std::string_view text, unsigned d);

/// Accepts "p", "-p", "p/q"; result is canonicalized.
Coefficient parse_coefficient(std::string_view text);

}  // namespace cuntz
