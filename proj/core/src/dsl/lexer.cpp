#include "neutro/dsl/lexer.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

namespace neutro::dsl {

namespace {

constexpr std::array<std::string_view, 9> keywords{
    "universe", "set", "relation", "over", "eval", "check", "classify", "in", "complement",
};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        while (!at_end()) {
            const char c = peek();
            if (c == '\n') {
                advance();
                if (depth_ == 0 && !out_.empty() && out_.back().kind != TokenKind::newline) {
                    out_.push_back(Token{TokenKind::newline, "\n", {}, newline_pos_, offset_ - 1, 1});
                }
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
                continue;
            }
            if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
                continue;
            }
            lex_token();
        }
        while (!out_.empty() && out_.back().kind == TokenKind::newline) out_.pop_back();
        out_.push_back(Token{TokenKind::eof, "", {}, pos_, offset_, 0});
        return std::move(out_);
    }

private:
    [[nodiscard]] bool at_end() const { return offset_ >= src_.size(); }
    [[nodiscard]] char peek(std::size_t ahead = 0) const {
        return offset_ + ahead < src_.size() ? src_[offset_ + ahead] : '\0';
    }

    void advance() {
        const char c = src_[offset_++];
        if (c == '\n') {
            newline_pos_ = pos_;
            ++pos_.line;
            pos_.column = 1;
            return;
        }
        // A column ends with the last byte of a UTF-8 sequence.
        if (at_end() || (static_cast<unsigned char>(src_[offset_]) & 0xC0) != 0x80) {
            ++pos_.column;
        }
    }

    void emit(TokenKind kind, Position start, std::size_t begin) {
        Token t;
        t.kind = kind;
        t.text = std::string(src_.substr(begin, offset_ - begin));
        t.pos = start;
        t.offset = begin;
        t.length = offset_ - begin;
        out_.push_back(std::move(t));
    }

    [[noreturn]] void fail(Position at, std::string message) const {
        throw DiagnosticError(Stage::lex, at, std::move(message));
    }

    void lex_token() {
        const Position start = pos_;
        const std::size_t begin = offset_;
        const char c = peek();

        if (is_name_start(c)) {
            while (!at_end() && is_name_char(peek())) advance();
            const auto word = src_.substr(begin, offset_ - begin);
            emit(is_keyword(word) ? TokenKind::keyword : TokenKind::name, start, begin);
            return;
        }
        if (is_digit(c) || (c == '.' && is_digit(peek(1))) ||
            (c == '-' && (is_digit(peek(1)) || (peek(1) == '.' && is_digit(peek(2)))))) {
            lex_number(start, begin);
            return;
        }

        TokenKind kind{};
        switch (c) {
        case '(': kind = TokenKind::lparen; ++depth_; break;
        case '[': kind = TokenKind::lbracket; ++depth_; break;
        case '{': kind = TokenKind::lbrace; ++depth_; break;
        case ')': kind = TokenKind::rparen; close(); break;
        case ']': kind = TokenKind::rbracket; close(); break;
        case '}': kind = TokenKind::rbrace; close(); break;
        case ',': kind = TokenKind::comma; break;
        case ':': kind = TokenKind::colon; break;
        case '.': kind = TokenKind::dot; break;
        case '=': kind = TokenKind::equals; break;
        case '|': kind = TokenKind::pipe; break;
        case '&': kind = TokenKind::amp; break;
        case '\\': kind = TokenKind::backslash; break;
        case '<':
            if (peek(1) != '=') fail(start, "unexpected character '<' (did you mean '<='?)");
            advance();
            kind = TokenKind::subset;
            break;
        default: fail(start, "unexpected character " + quote_char(begin));
        }
        advance();
        emit(kind, start, begin);
    }

    void close() {
        if (depth_ > 0) --depth_;
    }

    std::string quote_char(std::size_t at) const {
        std::size_t len = 1;
        while (at + len < src_.size() &&
               (static_cast<unsigned char>(src_[at + len]) & 0xC0) == 0x80) {
            ++len;
        }
        return "'" + std::string(src_.substr(at, len)) + "'";
    }

    // Consumes [-]digits[.digits][e[+-]digits] and returns its value.
    double scan_decimal(bool allow_sign) {
        const std::size_t begin = offset_;
        const Position start = pos_;
        if (allow_sign && peek() == '-') advance();
        while (is_digit(peek())) advance();
        if (peek() == '.' && is_digit(peek(1))) {
            advance();
            while (is_digit(peek())) advance();
        }
        if (peek() == 'e' || peek() == 'E') {
            const std::size_t sign = (peek(1) == '+' || peek(1) == '-') ? 1 : 0;
            if (!is_digit(peek(1 + sign))) fail(pos_, "malformed exponent");
            advance();
            if (sign) advance();
            while (is_digit(peek())) advance();
        }
        const auto text = src_.substr(begin, offset_ - begin);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
            fail(start, "number out of range: " + std::string(text));
        }
        return value;
    }

    void lex_number(Position start, std::size_t begin) {
        const double standard = scan_decimal(true);
        double coeff = 0.0;
        if (peek() == '^') {
            const Position caret = pos_;
            advance();
            const char sign = peek();
            if (sign != '+' && sign != '-') fail(caret, "expected '^+' or '^-'");
            advance();
            double magnitude = 1.0;
            if (is_digit(peek()) || (peek() == '.' && is_digit(peek(1)))) {
                magnitude = scan_decimal(false);
            }
            coeff = sign == '+' ? magnitude : -magnitude;
        }
        if (is_name_char(peek())) fail(pos_, "unexpected character " + quote_char(offset_) + " after number");
        emit(TokenKind::number, start, begin);
        out_.back().value = NonStdValue(standard, coeff);
    }

    std::string_view src_;
    std::size_t offset_ = 0;
    Position pos_{};
    Position newline_pos_{};
    int depth_ = 0;
    std::vector<Token> out_;
};

} // namespace

bool is_keyword(std::string_view word) noexcept {
    for (auto kw : keywords) {
        if (kw == word) return true;
    }
    return false;
}

std::string_view describe(TokenKind kind) noexcept {
    switch (kind) {
    case TokenKind::name: return "name";
    case TokenKind::number: return "number";
    case TokenKind::keyword: return "keyword";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::comma: return "','";
    case TokenKind::colon: return "':'";
    case TokenKind::dot: return "'.'";
    case TokenKind::equals: return "'='";
    case TokenKind::pipe: return "'|'";
    case TokenKind::amp: return "'&'";
    case TokenKind::backslash: return "'\\'";
    case TokenKind::subset: return "'<='";
    case TokenKind::newline: return "end of line";
    case TokenKind::eof: return "end of input";
    }
    return "token";
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

} // namespace neutro::dsl
