#pragma once

#include <string>

#include "blax/ratfunc.hpp"

namespace blax {

// Recursive-descent parser for the scenario expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' integer)?
//   base   := rational | 'lambda' | 'mu' | '(' expr ')' | '-' factor
// The result is an exact canonical RatFunc.  Failures raise SyntaxError
// carrying the byte offset of the offending character; dividing by an
// identically-zero subexpression raises PoleError.
RatFunc parse_expression(const std::string& text);

}  // namespace blax
