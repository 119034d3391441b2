#pragma once

#include <string_view>

#include "amoeba/laurent.hpp"

namespace amoeba {

// Parses the polynomial expression grammar:
//   terms of the form `c`, `c*x^j*y^k` with coefficients written as a
//   decimal, `i`, `<decimal>i`, `(re,im)` or `e^{i p pi}`; `+`, `-`, `*`
//   and parentheses combine subexpressions; exponents are any integers
//   (negative allowed, with or without parentheses). Whitespace is ignored
//   and adjacency multiplies, so "(1+x)(1+y)" and "2x" are accepted.
//
// Throws SyntaxError (with byte position) on malformed input and
// Error{EmptyPolynomial} when everything cancels.
LaurentPolynomial parse_polynomial(std::string_view text);

}  // namespace amoeba
