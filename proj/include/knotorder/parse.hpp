/*
 * parse.hpp
 * ---------
 * Text parser for integer Laurent polynomials in the variable t.
 *
 * Grammar (whitespace ignored everywhere):
 *   poly  := ["+"|"-"] term (("+"|"-") term)*
 *   term  := coeff | coeff "*"? var | var
 *   var   := "t" ("^" "("? "-"? digits ")"?)?
 *   coeff := digits
 *
 * Both "t^-1" and "t^(-1)" are accepted.
 */
#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "knotorder/poly.hpp"

namespace knotorder {

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset(offset) {}
    size_t offset;  // byte offset into the input
};

LaurentPolynomial parse_poly(std::string_view text);

}  // namespace knotorder
