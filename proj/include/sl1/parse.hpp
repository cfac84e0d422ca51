#pragma once

#include <stdexcept>
#include <string>

#include "sl1/ast.hpp"

namespace sl1 {

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line, int col, const std::string& msg);
};

// Grammar (precedence low to high): <-> left, -> right, | left, & left,
// * left, -* right, ! prefix. Binders take the longest possible body;
// "exists x, y . f" sugars to nested binders. Line comments start with '#'.
SLFormula parse_sl(const std::string& text);

// Same boolean/binder syntax; terms are VAR | f(term), atoms term = term or
// PNAME(term). "f" is reserved for the function symbol.
FOFormula parse_fo(const std::string& text);

}  // namespace sl1
