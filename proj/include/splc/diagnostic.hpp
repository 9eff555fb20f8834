#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "splc/source.hpp"

namespace splc {

// Every diagnostic the frontend and the analyses can emit. All are errors.
//
// Span conventions (the oracle checker reproduces these independently):
//   Lex001/Lex002   the offending character / literal
//   Syn001          the unexpected token
//   Name001         the identifier occurrence (term, type name, or callee)
//   Name002         the second and any later declaration of the name
//   Type001         the non-int operand
//   Type002         the accessed term that is not an array
//   Type003         the index term that is not an int
//   Type004         the condition term
//   Type005         the whole assignment statement
//   Type006         the assignment target term
//   Type007         the callee name
//   Type008         the whole call statement
//   Type009/Type010 the offending argument
//   Type011         the type name occurrence
//   Type012         the type synonym declaration
enum class DiagCode {
    Lex001,  // unexpected character
    Lex002,  // integer literal too large
    Syn001,  // unexpected token
    Name001, // undefined variable
    Name002, // duplicate declaration
    Type001, // operand must be int
    Type002, // illegal access
    Type003, // illegal index
    Type004, // condition must be boolean
    Type005, // assignment type mismatch
    Type006, // illegal assignment target
    Type007, // not a procedure
    Type008, // wrong number of arguments
    Type009, // argument type mismatch
    Type010, // ref argument must be a variable
    Type011, // not a type
    Type012, // cyclic type synonym
};

// "NAME001", "TYPE004", ...
std::string_view to_string(DiagCode code);

struct Diagnostic {
    DiagCode code;
    SourceSpan span;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// "file:line:col: error[CODE]: message"
std::string render(const Diagnostic& diag);

// Orders by (line, col, code, message) for deterministic output.
void sort_diagnostics(std::vector<Diagnostic>& diags);

// Thrown by the lexer and parser on the first error; analyses never throw it.
class CompileError : public std::runtime_error {
public:
    explicit CompileError(Diagnostic diag)
        : std::runtime_error(render(diag)), diagnostic_(std::move(diag)) {}

    const Diagnostic& diagnostic() const { return diagnostic_; }

private:
    Diagnostic diagnostic_;
};

} // namespace splc
