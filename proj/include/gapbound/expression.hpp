#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gapbound/rational_function.hpp"

namespace gapbound {

/// Expression tree over rational constants and the variable t.
///
/// Grammar (loosest to tightest): binary + - (left), binary * / (left),
/// unary -, ^ (right, integer exponent). Implicit multiplication is not
/// accepted: "2t" is a syntax error, write "2*t".
struct Expr {
    enum class Kind { Constant, Variable, Negate, Add, Sub, Mul, Div, Pow };

    Kind kind = Kind::Constant;
    BigRational value;          // Constant
    long exponent = 0;          // Pow
    std::vector<Expr> operands; // Negate: 1, binary: 2, Pow: 1 (the base)
    std::size_t position = 0;   // byte offset of the node's first token
};

/// Throws SyntaxError (with position) or NonIntegerExponent.
Expr parse_expression(std::string_view text);

/// Throws DivideByZeroPolynomial when a division or negative power hits zero.
RationalFunction evaluate(const Expr& e);

/// parse_expression followed by evaluate.
RationalFunction parse_rational_function(std::string_view text);

/// A rational constant written as an expression, e.g. "-3/4" or "0.5".
BigRational parse_rational_constant(std::string_view text);

}  // namespace gapbound
