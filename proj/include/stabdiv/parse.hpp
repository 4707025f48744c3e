// Text grammar for polynomials and vector polynomials.
//
//   poly    := ['+'|'-'] term (('+'|'-') term)*
//   term    := coefficient ['*' monomial] | monomial
//   coeff   := integer | rational 'a/b' | '(' complex ')'
//   complex := rational | [rational] ('+'|'-') rational 'i' | rational 'i'
//   monomial:= factor (['*'] factor)*      factor := var ['^' uint]
//   var     := 'x' | 'y' (d = 2)  or  'z'<index> (1-based)
//   vector  := '(' poly (',' poly)* ')'
//
// Whitespace is insignificant. format() emits the same grammar and
// parse(format(p)) == p.
#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "stabdiv/polynomial.hpp"

namespace stabdiv {

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

Polynomial parse_polynomial(const std::string& text, std::size_t dim);
VectorPolynomial parse_vector_polynomial(const std::string& text, std::size_t dim);

// Auto-detects: a top-level parenthesized comma list is a vector polynomial.
std::variant<Polynomial, VectorPolynomial> parse(const std::string& text, std::size_t dim);

// Terms are emitted in decreasing order under ord.
std::string format(const Polynomial& p, const WeightedOrder& ord);
std::string format(const Polynomial& p);  // graded lex default
std::string format(const VectorPolynomial& v);

}  // namespace stabdiv
