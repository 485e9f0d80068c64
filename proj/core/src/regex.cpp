#include "ratsub/regex.hpp"

#include <cctype>

namespace ratsub {

namespace {

using ExprPtr = std::shared_ptr<RationalExpression>;

struct Token {
    enum class Kind { Letter, One, Bar, Star, Dot, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    Lexer(const Alphabet& a, const std::string& text) : a_(a), text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= text_.size()) {
            tok_ = {Token::Kind::End, "", start};
            return;
        }
        char c = text_[i_];
        switch (c) {
            case '|': ++i_; tok_ = {Token::Kind::Bar, "|", start}; return;
            case '*': ++i_; tok_ = {Token::Kind::Star, "*", start}; return;
            case '.': ++i_; tok_ = {Token::Kind::Dot, ".", start}; return;
            case '(': ++i_; tok_ = {Token::Kind::LParen, "(", start}; return;
            case ')': ++i_; tok_ = {Token::Kind::RParen, ")", start}; return;
            default: break;
        }
        std::string name;
        while (i_ < text_.size()) {
            char d = text_[i_];
            if (std::isspace(static_cast<unsigned char>(d)) || d == '|' || d == '*' ||
                d == '.' || d == '(' || d == ')')
                break;
            name += d;
            ++i_;
        }
        if (name == "1") {
            tok_ = {Token::Kind::One, name, start};
        } else {
            tok_ = {Token::Kind::Letter, name, start};
        }
    }

    const Alphabet& a_;
    const std::string& text_;
    std::size_t i_ = 0;
    Token tok_{Token::Kind::End, "", 0};
};

class Parser {
public:
    Parser(const Alphabet& a, const std::string& text) : a_(a), lex_(a, text), text_(text) {}

    ExprPtr run() {
        ExprPtr e = parse_union();
        if (lex_.peek().kind != Token::Kind::End)
            fail("unexpected trailing input", lex_.peek().pos);
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what, std::size_t pos) {
        throw parse_error("expression '" + text_ + "': " + what + " at position " +
                          std::to_string(pos));
    }

    ExprPtr parse_union() {
        ExprPtr e = parse_concat();
        while (lex_.peek().kind == Token::Kind::Bar) {
            lex_.take();
            ExprPtr rhs = parse_concat();
            auto u = std::make_shared<RationalExpression>();
            u->kind = RationalExpression::Kind::Union;
            u->children = {e, rhs};
            e = u;
        }
        return e;
    }

    bool starts_factor() const {
        auto k = lex_.peek().kind;
        return k == Token::Kind::Letter || k == Token::Kind::One || k == Token::Kind::LParen;
    }

    ExprPtr parse_concat() {
        ExprPtr e = parse_factor();
        while (true) {
            if (lex_.peek().kind == Token::Kind::Dot) {
                lex_.take();
            } else if (!starts_factor()) {
                break;
            }
            ExprPtr rhs = parse_factor();
            auto c = std::make_shared<RationalExpression>();
            c->kind = RationalExpression::Kind::Concat;
            c->children = {e, rhs};
            e = c;
        }
        return e;
    }

    ExprPtr parse_factor() {
        ExprPtr e = parse_atom();
        while (lex_.peek().kind == Token::Kind::Star) {
            lex_.take();
            auto s = std::make_shared<RationalExpression>();
            s->kind = RationalExpression::Kind::Star;
            s->children = {e};
            e = s;
        }
        return e;
    }

    ExprPtr parse_atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::One: {
                auto e = std::make_shared<RationalExpression>();
                e->kind = RationalExpression::Kind::Epsilon;
                return e;
            }
            case Token::Kind::Letter: {
                auto l = a_.find(t.text);
                if (!l) fail("unknown letter '" + t.text + "'", t.pos);
                auto e = std::make_shared<RationalExpression>();
                e->kind = RationalExpression::Kind::Letter;
                e->letter = *l;
                return e;
            }
            case Token::Kind::LParen: {
                ExprPtr e = parse_union();
                if (lex_.peek().kind != Token::Kind::RParen)
                    fail("expected ')'", lex_.peek().pos);
                lex_.take();
                return e;
            }
            default:
                fail("expected a letter, '1' or '('", t.pos);
        }
    }

    const Alphabet& a_;
    Lexer lex_;
    const std::string& text_;
};

// Thompson fragment: states [start, end] inside a growing edge set.
struct Frag {
    std::uint32_t start;
    std::uint32_t end;
};

Frag build(const RationalExpression& e, std::set<Edge>& edges, std::uint32_t& next) {
    switch (e.kind) {
        case RationalExpression::Kind::Epsilon: {
            std::uint32_t s = next++;
            return {s, s};
        }
        case RationalExpression::Kind::Letter: {
            std::uint32_t s = next++, t = next++;
            edges.insert(Edge{s, static_cast<Label>(e.letter), t});
            return {s, t};
        }
        case RationalExpression::Kind::Concat: {
            Frag f1 = build(*e.children[0], edges, next);
            Frag f2 = build(*e.children[1], edges, next);
            edges.insert(Edge{f1.end, kEpsilon, f2.start});
            return {f1.start, f2.end};
        }
        case RationalExpression::Kind::Union: {
            std::uint32_t s = next++, t = next++;
            Frag f1 = build(*e.children[0], edges, next);
            Frag f2 = build(*e.children[1], edges, next);
            edges.insert(Edge{s, kEpsilon, f1.start});
            edges.insert(Edge{s, kEpsilon, f2.start});
            edges.insert(Edge{f1.end, kEpsilon, t});
            edges.insert(Edge{f2.end, kEpsilon, t});
            return {s, t};
        }
        case RationalExpression::Kind::Star: {
            std::uint32_t s = next++;
            Frag f = build(*e.children[0], edges, next);
            edges.insert(Edge{s, kEpsilon, f.start});
            edges.insert(Edge{f.end, kEpsilon, s});
            return {s, s};
        }
    }
    throw error("unreachable");
}

} // namespace

std::shared_ptr<RationalExpression> RationalExpression::parse(const Alphabet& a,
                                                              const std::string& text) {
    return Parser(a, text).run();
}

Nfa compile(const RationalExpression& e, const Alphabet& a) {
    std::set<Edge> edges;
    std::uint32_t next = 0;
    Frag f = build(e, edges, next);
    return Nfa(a, next, f.start, {f.end}, std::move(edges));
}

Nfa compile(const Alphabet& a, const std::string& expression) {
    return compile(*RationalExpression::parse(a, expression), a);
}

} // namespace ratsub
