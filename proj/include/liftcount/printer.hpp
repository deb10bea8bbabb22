#pragma once

#include <string>

#include "liftcount/ast.hpp"

namespace liftcount {

std::string pretty_print(const FormulaPtr& f, const Sentence& s);

// Full sentence-file form: directives plus the formula; re-parses to a
// structurally identical sentence.
std::string pretty_print(const Sentence& s);

}  // namespace liftcount
