#pragma once

#include <string>

#include "sl1/ast.hpp"

namespace sl1 {

// Canonical ASCII rendering with minimal parentheses; parse(print(f)) is
// structurally equal to f. Binders are parenthesized whenever they occur as
// an operand, since their body extends maximally to the right.
std::string print_sl(const SLFormula& f);
std::string print_fo(const FOFormula& f);
std::string print_fo_term(const FOTerm& t);

}  // namespace sl1
