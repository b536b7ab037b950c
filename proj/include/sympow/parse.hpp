#pragma once

#include <string>
#include <vector>

#include "sympow/poly.hpp"
#include "sympow/ring.hpp"

namespace sympow {

// Grammar: FIELD '[' ident (',' ident)* ']' with FIELD one of QQ, Fp(<prime>).
// Default active order is graded-reverse-lex.
Ring parse_ring(const std::string& text);

// Signed sums of terms; '*' optional between factors ("2xz" works when the
// variable segmentation is unambiguous), '^' for powers, '/' only by nonzero
// constants, parentheses allowed. parse_poly(r, p.str()) == p.
Poly parse_poly(const Ring& ring, const std::string& text);

// Comma-separated polynomials (the wire form for generator lists).
std::vector<Poly> parse_poly_list(const Ring& ring, const std::string& text);

} // namespace sympow
