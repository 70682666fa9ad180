#pragma once

#include <string>
#include <string_view>

#include "garside/element.hpp"

namespace garside {

/// Parses a word of the grammar: whitespace-separated atom tokens with
/// optional integer exponents ("s1 s2^-1", "x^2 y"), `D` for Delta, and
/// `( <word> , <word> )` for direct products. `.` separators are ignored,
/// so printed normal forms parse back.
Element parse_element(const GarsideStructure& st, std::string_view text);

/// Canonical word of an element: "D^r . f1 . f2 ..." with deterministic
/// factor words; re-parsing yields an equal element.
std::string to_word(const Element& g);

/// Deterministic positive word for one simple ("D^0" for 1, "D" for Delta).
std::string word_of_simple(const GarsideStructure& st, const Simple& s);

/// Combines component elements into an element of the product structure.
Element product_element(const GarsideStructure& product_st, const Element& left,
                        const Element& right);

}  // namespace garside
