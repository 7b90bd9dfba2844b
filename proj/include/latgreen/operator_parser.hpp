#ifndef LATGREEN_OPERATOR_PARSER_HPP
#define LATGREEN_OPERATOR_PARSER_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "latgreen/lattice.hpp"

namespace latgreen {

/**
 * Parses a Laurent polynomial in z1..zn:
 *
 *     expr     := ['+'|'-'] term (('+'|'-') term)*
 *     term     := factor ('*' factor)*
 *     factor   := 'z' index ['^' exponent] | '1/z' index ['^' exponent]
 *               | '(' expr ')' | rational
 *     rational := integer ['/' positive-integer]
 *
 * Whitespace (including newlines) is ignored between tokens. Errors are
 * SyntaxError with "line L, column C" in the message, or IndexOutOfRange
 * for a z index outside 1..num_vars.
 */
LaurentPolynomial parse_laurent(std::string_view text, std::size_t num_vars);

/// Parses the symbol and converts it to the operator. Raises ZeroOperator
/// when the expression simplifies to 0.
DifferenceOperator parse_operator(std::string_view text, std::size_t num_vars);

/// Structured form: a JSON list of {"alpha": [..], "coeff": "p/q"} objects.
/// num_vars = 0 takes the length of the first alpha.
DifferenceOperator parse_operator_json(std::string_view json_text, std::size_t num_vars = 0);

/// Largest z index used in an expression (at least 1).
std::size_t infer_num_vars(std::string_view text);

/// Canonical symbol text; parse_operator(serialize_operator(op), n) == op.
std::string serialize_operator(const DifferenceOperator& op);

} // namespace latgreen

#endif // LATGREEN_OPERATOR_PARSER_HPP
