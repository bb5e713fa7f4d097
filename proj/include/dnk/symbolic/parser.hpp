#ifndef DNK_SYMBOLIC_PARSER_HPP
#define DNK_SYMBOLIC_PARSER_HPP

#include "dnk/symbolic/scalar.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnk {

struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " at column " + std::to_string(pos + 1)), position(pos) {}
    std::size_t position;  // 0-based offset into the parsed text
};

// What an identifier may refer to while parsing.
struct ParseContext {
    std::vector<std::string> variables;
    bool complex_mode = false;
    const std::map<std::string, Scalar>* symbols = nullptr;  // named scalars
};

/*
 * Grammar (whitespace ignored between tokens):
 *
 *   expr     := term { ("+" | "-") term }
 *   term     := unary { ("*" | "/") unary }
 *   unary    := ("-" | "+") unary | power
 *   power    := primary [ "^" exponent ]
 *   exponent := ["-"] INTEGER | "(" expr ")"      (must be an integer constant)
 *   primary  := INTEGER | IDENT | "(" expr ")"
 *   IDENT    := [a-zA-Z][a-zA-Z0-9_]*
 *
 * "i" is the imaginary unit in complex mode and an ordinary identifier otherwise.
 */
Scalar parse_scalar(const std::string& text, const ParseContext& ctx);

// Fully parenthesised canonical text; parse_scalar(print_scalar(s)) == s.
std::string print_scalar(const Scalar& s, const std::vector<std::string>& variables);
std::string print_polynomial(const Polynomial& p, const std::vector<std::string>& variables);

}  // namespace dnk

#endif
