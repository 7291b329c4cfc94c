#pragma once

#include "ndmc/logic.hpp"

namespace ndmc {

/// Parses the formula language.
///
/// Grammar sketch (quantifier bodies extend as far right as possible):
///   expr    := quantifier | iff
///   quant   := ('exists'|'forall'|'existsS'|'forallS') IDENT '.' expr
///   iff     := imp ('<->' imp)*            (left-assoc)
///   imp     := or ['->' imp]               (right-assoc)
///   or      := and ('|' and)*
///   and     := unary ('&' unary)*
///   unary   := '!' unary | primary
///   primary := '(' expr ')' | 'true' | 'false' | atom
///   atom    := 'E' '(' term ',' term ')' | 'D' '(' term ',' term ')'
///            | term ('='|'!=') term | term 'in' IDENT
///   term    := IDENT | '@' IDENT
///
/// `x in Name` is a set-membership atom when Name is bound by an enclosing
/// set quantifier, otherwise a color test. Vertex variables must be bound.
/// `#` starts a comment. Throws ParseError with 1-based line/column.
FormulaPtr parse_formula(const std::string& text);

}  // namespace ndmc
