#pragma once

#include <vector>

#include "splc/ast.hpp"
#include "splc/token.hpp"

namespace splc {

// Recursive-descent parser. Builds the Program tree into `ast` and returns
// the root. Comparison binds looser than additive, additive looser than
// multiplicative; binary operators are left-associative; unary minus binds
// tighter than any binary operator, array indexing tighter still.
// Throws CompileError (SYN001) on the first syntax error.
const AstNode& parse(const std::vector<Token>& tokens, Ast& ast);

} // namespace splc
