#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "splc/source.hpp"

namespace splc {

enum class TokenKind {
    Identifier,
    Numeral,
    Keyword,
    Operator,
    Punctuation,
    Eof,
};

std::string_view to_string(TokenKind kind);

struct Token {
    TokenKind kind = TokenKind::Eof;
    std::string_view text;
    SourceSpan span;
    std::size_t offset = 0; // byte offset of the first lexeme character

    bool is(TokenKind k) const { return kind == k; }
    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
};

} // namespace splc
