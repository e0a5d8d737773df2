#include <cctype>
#include <limits>

#include "radicalc/exprlang.hpp"

namespace radicalc {

Expr Expr::rational(BigRational v, Span span)
{
    Expr e;
    e.kind = Kind::Rational;
    e.value = std::move(v);
    e.span = span;
    return e;
}

Expr Expr::rt(Expr radicand, std::uint64_t index, Span span)
{
    Expr e;
    e.kind = Kind::Rt;
    e.index = index;
    e.children.push_back(std::move(radicand));
    e.span = span;
    return e;
}

Expr Expr::neg(Expr operand, Span span)
{
    Expr e;
    e.kind = Kind::Neg;
    e.children.push_back(std::move(operand));
    e.span = span;
    return e;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs, Span span)
{
    Expr e;
    e.kind = kind;
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    e.span = span;
    return e;
}

Expr Expr::pow(Expr base, std::int64_t power, Span span)
{
    Expr e;
    e.kind = Kind::Pow;
    e.power = power;
    e.children.push_back(std::move(base));
    e.span = span;
    return e;
}

bool operator==(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind || a.children != b.children)
        return false;
    switch (a.kind) {
    case Expr::Kind::Rational:
        return a.value == b.value;
    case Expr::Kind::Rt:
        return a.index == b.index;
    case Expr::Kind::Pow:
        return a.power == b.power;
    default:
        return true;
    }
}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::size_t begin;
    std::size_t end;
    std::string_view text;
};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) { advance(); }

    Expr sum()
    {
        Expr lhs = product();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const auto kind = cur_.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
            advance();
            Expr rhs = product();
            const Span span{lhs.span.begin, rhs.span.end};
            lhs = Expr::binary(kind, std::move(lhs), std::move(rhs), span);
        }
        return lhs;
    }

    bool at(Tok kind) const { return cur_.kind == kind; }
    void skip() { advance(); }

    void expect_end()
    {
        if (cur_.kind != Tok::End)
            fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    }

    void expect_end_or_comma()
    {
        if (cur_.kind != Tok::End && cur_.kind != Tok::Comma)
            fail({"'+'", "'-'", "'*'", "'/'", "'^'", "','", "end of input"});
    }

private:
    Expr product()
    {
        Expr lhs = unary();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            const auto kind = cur_.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div;
            advance();
            Expr rhs = unary();
            const Span span{lhs.span.begin, rhs.span.end};
            lhs = Expr::binary(kind, std::move(lhs), std::move(rhs), span);
        }
        return lhs;
    }

    Expr unary()
    {
        if (cur_.kind == Tok::Minus) {
            const std::size_t begin = cur_.begin;
            advance();
            Expr operand = unary();
            const Span span{begin, operand.span.end};
            return Expr::neg(std::move(operand), span);
        }
        return power();
    }

    Expr power()
    {
        Expr base = primary();
        if (cur_.kind != Tok::Caret)
            return base;
        advance();
        const bool paren = cur_.kind == Tok::LParen;
        if (paren)
            advance();
        bool negative = false;
        if (cur_.kind == Tok::Minus || cur_.kind == Tok::Plus) {
            negative = cur_.kind == Tok::Minus;
            advance();
        }
        if (cur_.kind != Tok::Int)
            fail(paren ? std::vector<std::string>{"integer", "'-'", "'+'"}
                       : std::vector<std::string>{"integer", "'-'", "'+'", "'('"});
        const Token digits = cur_;
        const BigInt magnitude(std::string(digits.text), 10);
        BigInt signed_value = negative ? BigInt(-magnitude) : magnitude;
        if (!signed_value.fits_slong_p())
            throw SyntaxError("exponent " + signed_value.get_str() + " is out of range", digits.begin,
                              {"64-bit integer"});
        advance();
        std::size_t end = digits.end;
        if (paren) {
            end = cur_.end;
            consume(Tok::RParen, "')'");
        }
        const Span span{base.span.begin, end};
        return Expr::pow(std::move(base), signed_value.get_si(), span);
    }

    Expr primary()
    {
        const Token t = cur_;
        switch (t.kind) {
        case Tok::Int:
            advance();
            return Expr::rational(BigRational(BigInt(std::string(t.text), 10)), {t.begin, t.end});
        case Tok::LParen: {
            advance();
            Expr inner = sum();
            consume(Tok::RParen, "')'");
            return inner;
        }
        case Tok::Ident: {
            if (t.text != "rt" && t.text != "sqrt")
                fail({"integer", "'('", "'rt'", "'sqrt'", "'-'"});
            const bool is_rt = t.text == "rt";
            advance();
            consume(Tok::LParen, "'('");
            Expr radicand = sum();
            std::uint64_t index = 2;
            if (is_rt) {
                consume(Tok::Comma, "','");
                index = index_literal();
            }
            const std::size_t end = cur_.end;
            consume(Tok::RParen, "')'");
            return Expr::rt(std::move(radicand), index, {t.begin, end});
        }
        default:
            fail({"integer", "'('", "'rt'", "'sqrt'", "'-'"});
        }
    }

    std::uint64_t index_literal()
    {
        if (cur_.kind != Tok::Int)
            fail({"positive integer index"});
        const Token t = cur_;
        const BigInt value(std::string(t.text), 10);
        if (value == 0)
            throw IndexError("radical index must be at least 1", Span{t.begin, t.end});
        if (!value.fits_ulong_p())
            throw IndexError("radical index " + value.get_str() + " is too large", Span{t.begin, t.end});
        advance();
        return value.get_ui();
    }

    void consume(Tok kind, const char* what)
    {
        if (cur_.kind != kind)
            fail({what});
        advance();
    }

    [[noreturn]] void fail(std::vector<std::string> expected) const
    {
        const std::string found = cur_.kind == Tok::End ? "end of input" : "'" + std::string(cur_.text) + "'";
        std::string message = "unexpected " + found + " at offset " + std::to_string(cur_.begin) + ", expected ";
        for (std::size_t i = 0; i < expected.size(); ++i)
            message += (i == 0 ? "" : " or ") + expected[i];
        throw SyntaxError(message, cur_.begin, std::move(expected));
    }

    void advance()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        const std::size_t begin = pos_;
        if (pos_ >= text_.size()) {
            cur_ = {Tok::End, begin, begin, {}};
            return;
        }
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            cur_ = {Tok::Int, begin, pos_, text_.substr(begin, pos_ - begin)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            cur_ = {Tok::Ident, begin, pos_, text_.substr(begin, pos_ - begin)};
            return;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        default:
            throw SyntaxError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(begin),
                              begin, {"expression"});
        }
        ++pos_;
        cur_ = {kind, begin, pos_, text_.substr(begin, 1)};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token cur_{Tok::End, 0, 0, {}};
};

} // namespace

Expr parse(std::string_view text)
{
    Parser p(text);
    Expr e = p.sum();
    p.expect_end();
    return e;
}

std::vector<Expr> parse_list(std::string_view text)
{
    Parser p(text);
    std::vector<Expr> out;
    out.push_back(p.sum());
    p.expect_end_or_comma();
    while (p.at(Tok::Comma)) {
        p.skip();
        out.push_back(p.sum());
        p.expect_end_or_comma();
    }
    return out;
}

std::string render(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Rational:
        if (e.value.sign() >= 0 && e.value.is_integer())
            return e.value.to_string();
        return "(" + e.value.to_string() + ")";
    case Expr::Kind::Rt:
        return "rt(" + render(e.children[0]) + ", " + std::to_string(e.index) + ")";
    case Expr::Kind::Neg:
        return "(-" + render(e.children[0]) + ")";
    case Expr::Kind::Pow:
        return "(" + render(e.children[0]) + ")^" +
               (e.power < 0 ? "(" + std::to_string(e.power) + ")" : std::to_string(e.power));
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
        const char* op = e.kind == Expr::Kind::Add   ? " + "
                         : e.kind == Expr::Kind::Sub ? " - "
                         : e.kind == Expr::Kind::Mul ? " * "
                                                     : " / ";
        return "(" + render(e.children[0]) + op + render(e.children[1]) + ")";
    }
    }
    return {};
}

} // namespace radicalc
