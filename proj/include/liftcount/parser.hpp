#pragma once

#include <stdexcept>
#include <string>

#include "liftcount/ast.hpp"

namespace liftcount {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

// Parses the full sentence-file format: directives plus one formula, which
// may span several non-directive lines. Validates arities, axiom roles,
// closedness and the two-variable restriction.
Sentence parse_sentence(const std::string& text);

// Rejects any variable name outside {x, y}, naming the offending atom or
// quantifier. Re-binding x or y is legal.
void check_two_variable(const Sentence& s);

}  // namespace liftcount
