#pragma once

#include "neutro/dsl/diagnostic.hpp"
#include "neutro/hyperreal.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace neutro::dsl {

enum class TokenKind {
    name,
    number,
    keyword,
    lparen,    // (
    rparen,    // )
    lbracket,  // [
    rbracket,  // ]
    lbrace,    // {
    rbrace,    // }
    comma,     // ,
    colon,     // :
    dot,       // .
    equals,    // =
    pipe,      // |
    amp,       // &
    backslash, // \ (set difference)
    subset,    // <=
    newline,
    eof,
};

struct Token {
    TokenKind kind = TokenKind::eof;
    std::string text;   // source spelling
    NonStdValue value;  // numbers only
    Position pos;
    std::size_t offset = 0; // byte offset into the source
    std::size_t length = 0; // byte length in the source

    [[nodiscard]] bool is_keyword(std::string_view kw) const {
        return kind == TokenKind::keyword && text == kw;
    }
};

[[nodiscard]] bool is_keyword(std::string_view word) noexcept;
[[nodiscard]] std::string_view describe(TokenKind kind) noexcept;

// Splits source text into tokens. '#' starts a comment running to the end of
// the line. Newlines are reported only between statements: inside (), []
// and {} they are skipped, and runs of blank lines collapse into one token.
// The last token is always eof.
//
// Numbers: [-]digits[.digits][e[+-]digits], optionally followed by "^+" or
// "^-" and an unsigned coefficient magnitude ("0.5^+0.5"); without a
// magnitude the coefficient is 1.
//
// Throws DiagnosticError(Stage::lex) on the first unrecognized character.
[[nodiscard]] std::vector<Token> tokenize(std::string_view source);

} // namespace neutro::dsl
