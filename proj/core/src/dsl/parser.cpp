#include "neutro/dsl/parser.hpp"

#include "neutro/error.hpp"

#include <algorithm>
#include <optional>

namespace neutro::dsl {

namespace {

class Parser {
public:
    Parser(std::span<const Token> tokens, std::string_view source)
        : tokens_(tokens), source_(source) {
        if (tokens_.empty() || tokens_.back().kind != TokenKind::eof) {
            throw DiagnosticError(Stage::parse, Position{}, "token stream is not terminated");
        }
    }

    Script script() {
        Script out;
        while (!at(TokenKind::eof)) {
            out.statements.push_back(statement());
            if (!at(TokenKind::eof)) expect(TokenKind::newline, "end of line");
        }
        return out;
    }

    IntervalUnion lone_component() {
        auto c = component();
        expect(TokenKind::eof, "end of input");
        return c;
    }

    TripleLiteral lone_triple() {
        auto t = triple();
        expect(TokenKind::eof, "end of input");
        return t;
    }

private:
    [[nodiscard]] const Token &peek(std::size_t ahead = 0) const {
        const auto k = std::min(index_ + ahead, tokens_.size() - 1);
        return tokens_[k];
    }
    [[nodiscard]] bool at(TokenKind kind) const { return peek().kind == kind; }
    [[nodiscard]] bool at_keyword(std::string_view kw) const { return peek().is_keyword(kw); }

    const Token &take() {
        const Token &t = tokens_[index_];
        if (t.kind != TokenKind::eof) {
            last_end_ = t.offset + t.length;
            ++index_;
        }
        return t;
    }

    static std::string spelling(const Token &t) {
        switch (t.kind) {
        case TokenKind::name:
        case TokenKind::number:
        case TokenKind::keyword: return "'" + t.text + "'";
        default: return std::string(describe(t.kind));
        }
    }

    [[noreturn]] void fail_expected(std::string_view what) const {
        throw DiagnosticError(Stage::parse, peek().pos,
                              "expected " + std::string(what) + " but found " + spelling(peek()));
    }

    const Token &expect(TokenKind kind, std::string_view what) {
        if (!at(kind)) fail_expected(what);
        return take();
    }

    void expect_keyword(std::string_view kw) {
        if (!at_keyword(kw)) fail_expected("'" + std::string(kw) + "'");
        take();
    }

    Named name(std::string_view what = "a name") {
        const auto &t = expect(TokenKind::name, what);
        return {t.text, t.pos};
    }

    Statement statement() {
        const Token &first = peek();
        const std::size_t begin = first.offset;
        Statement s;
        s.pos = first.pos;
        if (first.is_keyword("universe")) {
            s.node = universe_decl();
        } else if (first.is_keyword("set")) {
            s.node = set_decl();
        } else if (first.is_keyword("relation")) {
            s.node = relation_decl();
        } else if (first.is_keyword("eval")) {
            take();
            if (auto q = member_query()) {
                s.node = std::move(*q);
            } else {
                s.node = EvalStmt{expr()};
            }
        } else if (first.is_keyword("check")) {
            take();
            auto lhs = expr();
            expect(TokenKind::subset, "'<='");
            s.node = CheckStmt{std::move(lhs), expr()};
        } else if (first.is_keyword("classify")) {
            take();
            auto set = name("a set name");
            expect(TokenKind::dot, "'.'");
            s.node = ClassifyStmt{std::move(set), name("an element name")};
        } else {
            fail_expected("a statement ('universe', 'set', 'relation', 'eval', 'check' or 'classify')");
        }
        s.source = std::string(source_.substr(begin, last_end_ - begin));
        return s;
    }

    UniverseDecl universe_decl() {
        take();
        UniverseDecl d{name("a universe name"), {}};
        expect(TokenKind::equals, "'='");
        expect(TokenKind::lbrace, "'{'");
        d.elements.push_back(name("an element name"));
        while (at(TokenKind::comma)) {
            take();
            d.elements.push_back(name("an element name"));
        }
        expect(TokenKind::rbrace, "',' or '}'");
        return d;
    }

    SetDecl set_decl() {
        take();
        SetDecl d{name("a set name"), {}, {}};
        expect_keyword("over");
        d.universe = name("a universe name");
        expect(TokenKind::lbrace, "'{'");
        if (!at(TokenKind::rbrace)) {
            do {
                if (!d.entries.empty()) take();
                auto element = name("an element name");
                expect(TokenKind::colon, "':'");
                d.entries.push_back({std::move(element), triple()});
            } while (at(TokenKind::comma));
        }
        expect(TokenKind::rbrace, "',' or '}'");
        return d;
    }

    RelationDecl relation_decl() {
        take();
        RelationDecl d{name("a relation name"), {}, {}};
        expect_keyword("over");
        d.domains.push_back(name("a universe name"));
        while (at(TokenKind::comma)) {
            take();
            d.domains.push_back(name("a universe name"));
        }
        expect(TokenKind::lbrace, "'{'");
        if (!at(TokenKind::rbrace)) {
            do {
                if (!d.entries.empty()) take();
                const Position pos = peek().pos;
                auto tuple = name_tuple();
                expect(TokenKind::colon, "':'");
                d.entries.push_back({std::move(tuple), pos, triple()});
            } while (at(TokenKind::comma));
        }
        expect(TokenKind::rbrace, "',' or '}'");
        return d;
    }

    std::vector<Named> name_tuple() {
        expect(TokenKind::lparen, "'('");
        std::vector<Named> out{name("an element name")};
        while (at(TokenKind::comma)) {
            take();
            out.push_back(name("an element name"));
        }
        expect(TokenKind::rparen, "',' or ')'");
        return out;
    }

    // Looks ahead for `NAME in` or `(NAME, ...) in`; leaves the position
    // untouched when the statement is an ordinary expression.
    std::optional<MemberQuery> member_query() {
        if (at(TokenKind::name) && peek(1).is_keyword("in")) {
            MemberQuery q;
            q.tuple.push_back(name());
            take();
            q.target = name("a set or relation name");
            return q;
        }
        if (!at(TokenKind::lparen)) return std::nullopt;
        std::size_t k = 1;
        if (peek(k).kind != TokenKind::name) return std::nullopt;
        ++k;
        while (peek(k).kind == TokenKind::comma && peek(k + 1).kind == TokenKind::name) k += 2;
        if (peek(k).kind != TokenKind::rparen || !peek(k + 1).is_keyword("in")) {
            return std::nullopt;
        }
        MemberQuery q;
        q.parenthesized = true;
        q.tuple = name_tuple();
        take();
        q.target = name("a set or relation name");
        return q;
    }

    ExprPtr make(Position pos, decltype(Expr::node) node) {
        auto e = std::make_unique<Expr>();
        e->node = std::move(node);
        e->pos = pos;
        return e;
    }

    ExprPtr expr() {
        auto lhs = term();
        while (at(TokenKind::pipe) || at(TokenKind::backslash)) {
            const Token &op = take();
            const auto kind = op.kind == TokenKind::pipe ? BinaryOp::unite : BinaryOp::difference;
            auto rhs = term();
            lhs = make(op.pos, BinaryExpr{kind, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr term() {
        auto lhs = factor();
        while (at(TokenKind::amp)) {
            const Token &op = take();
            auto rhs = factor();
            lhs = make(op.pos, BinaryExpr{BinaryOp::intersect, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr factor() {
        auto lhs = primary();
        while (at(TokenKind::name) && peek().text == "x") {
            const Token &op = take();
            auto rhs = primary();
            lhs = make(op.pos, BinaryExpr{BinaryOp::cartesian, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr primary() {
        const Position pos = peek().pos;
        if (at(TokenKind::name)) return make(pos, NameRef{take().text});
        if (at_keyword("complement")) {
            take();
            expect(TokenKind::lparen, "'('");
            auto operand = expr();
            expect(TokenKind::rparen, "')'");
            return make(pos, ComplementExpr{std::move(operand)});
        }
        if (at(TokenKind::lparen)) {
            take();
            auto inner = expr();
            expect(TokenKind::rparen, "')'");
            return inner;
        }
        fail_expected("a set name, 'complement' or '('");
    }

    TripleLiteral triple() {
        TripleLiteral t{IntervalUnion{0.0}, IntervalUnion{0.0}, IntervalUnion{0.0}, peek().pos};
        expect(TokenKind::lparen, "'('");
        t.truth = component();
        expect(TokenKind::comma, "','");
        t.indeterminacy = component();
        expect(TokenKind::comma, "','");
        t.falsity = component();
        expect(TokenKind::rparen, "')'");
        return t;
    }

    IntervalUnion component() {
        const Position pos = peek().pos;
        std::vector<Interval> parts;
        if (at(TokenKind::lbrace)) {
            take();
            const auto v = number();
            parts.push_back({v, v});
            while (at(TokenKind::comma)) {
                take();
                const auto w = number();
                parts.push_back({w, w});
            }
            expect(TokenKind::rbrace, "',' or '}'");
        } else {
            parts.push_back(interval());
            while (at(TokenKind::pipe)) {
                take();
                parts.push_back(interval());
            }
        }
        try {
            return IntervalUnion::canonicalize(std::move(parts));
        } catch (const Error &e) {
            throw DiagnosticError(Stage::parse, pos, e.what());
        }
    }

    Interval interval() {
        if (!at(TokenKind::lbracket)) {
            const auto v = number();
            return {v, v};
        }
        const Position pos = take().pos;
        const auto lo = number();
        expect(TokenKind::comma, "','");
        const auto hi = number();
        expect(TokenKind::rbracket, "']'");
        if (hi < lo) throw DiagnosticError(Stage::parse, pos, "inverted interval");
        return {lo, hi};
    }

    NonStdValue number() { return expect(TokenKind::number, "a number").value; }

    std::span<const Token> tokens_;
    std::string_view source_;
    std::size_t index_ = 0;
    std::size_t last_end_ = 0;
};

} // namespace

Script parse(std::span<const Token> tokens, std::string_view source) {
    return Parser(tokens, source).script();
}

Script parse_source(std::string_view source) {
    const auto tokens = tokenize(source);
    return parse(tokens, source);
}

IntervalUnion parse_component(std::string_view text) {
    const auto tokens = tokenize(text);
    return Parser(tokens, text).lone_component();
}

TripleLiteral parse_triple(std::string_view text) {
    const auto tokens = tokenize(text);
    return Parser(tokens, text).lone_triple();
}

} // namespace neutro::dsl
