#pragma once

#include <string_view>

#include "ternary/element.hpp"

namespace ternary {

/// Evaluate an expression in the grammar
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := primary ('^' uint)?
///   primary:= number | 'i' | 'w' | 'e[' uint ']'
///           | 'inv(' expr ')' | 'conj(' expr ')' | 'grade(' uint ',' expr ')'
///           | '(' expr ')'
/// left to right with algebra semantics. Numbers are integers, rationals
/// `p/q`, or decimals; exact mode converts decimals to exact rationals.
/// Throws ParseError with a character position on bad input.
ExactElement eval_exact(std::string_view text);
Element eval_float(std::string_view text);

/// Parse either the canonical text form or the structured JSON record
/// (detected by a leading '{').
ExactElement parse_exact_element(std::string_view text);
Element parse_float_element(std::string_view text);

}  // namespace ternary
