#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace splc {

// Half-open source range. Positions are 1-based; `line_end`/`col_end` point
// one past the last character, so a one-character span at 1:1 is 1:1-1:2.
struct SourceSpan {
    std::string_view file;
    int line_start = 1;
    int col_start = 1;
    int line_end = 1;
    int col_end = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

// Joins two spans into the smallest span covering both.
SourceSpan join(const SourceSpan& a, const SourceSpan& b);

// "line:col-line:col"
std::string to_string(const SourceSpan& span);

// An input file (or in-memory snippet). Owns the name and text that
// tokens, AST nodes and diagnostics reference via string_view, so it must
// outlive anything derived from it.
class SourceFile {
public:
    SourceFile(std::string name, std::string text)
        : name_(std::move(name)), text_(std::move(text)) {}

    std::string_view name() const { return name_; }
    std::string_view text() const { return text_; }

private:
    std::string name_;
    std::string text_;
};

} // namespace splc
