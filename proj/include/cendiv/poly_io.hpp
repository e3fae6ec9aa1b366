#pragma once

#include <string>

#include "cendiv/poly.hpp"

namespace cendiv {

// Canonical polynomial string syntax, used in I/O and reports everywhere:
//   over Q:        x^3 + 2*x - 1/2
//   over F_{p^k}:  x^2 + (t+1)*x + 2     (coefficients are polynomials in t)
// The parser is whitespace-insensitive and accepts arbitrary +,-,*,/,^,()
// expressions in x and t (t only over extension fields; / only by constants).
Poly parse_poly(const Field& field, const std::string& text);

// A single field element, i.e. a polynomial of degree <= 0 in x.
FieldElem parse_element(const Field& field, const std::string& text);

} // namespace cendiv
