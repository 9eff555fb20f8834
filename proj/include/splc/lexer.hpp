#pragma once

#include <vector>

#include "splc/source.hpp"
#include "splc/token.hpp"

namespace splc {

// Splits the source into tokens. The final token is always Eof. Token texts
// plus the skipped whitespace and `//` comments reproduce the input exactly.
// Throws CompileError (LEX001/LEX002) on the first lexical error.
std::vector<Token> tokenize(const SourceFile& source);

bool is_keyword(std::string_view word);

} // namespace splc
