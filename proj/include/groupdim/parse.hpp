#pragma once

#include <string>

#include "groupdim/real_element.hpp"

namespace groupdim {

/// Parses an exact real expression. Grammar (whitespace insignificant):
///
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := rational | "sqrt" "(" posint ")" | "(" expr ")" | '-' factor
///   rational := digits ('/' posint)?
///
/// '*' binds tighter than '+'/'-'; unary minus binds tighter than '*'.
/// Throws SyntaxError (with position), DomainError for sqrt of a nonpositive
/// argument, DivisionByZero for a zero denominator.
RealElement parse_real(const std::string& text);

/// Renders a value as a string the grammar reparses to an equal RealElement.
std::string render(const RealElement& a);

/// Float-mode front end: the same grammar extended with decimal literals
/// (digits '.' digits), evaluated in double arithmetic.
double parse_double(const std::string& text);

}  // namespace groupdim
