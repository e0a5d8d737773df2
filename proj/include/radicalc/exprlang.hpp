#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "radicalc/errors.hpp"
#include "radicalc/sumalg.hpp"

namespace radicalc {

/// Expression syntax tree. Nodes keep the byte span of their source text;
/// equality compares structure only.
///
/// Grammar, loosest to tightest binding:
///
///     sum      := product (("+" | "-") product)*
///     product  := unary (("*" | "/") unary)*
///     unary    := "-" unary | power
///     power    := primary ("^" exponent)?
///     exponent := sign? UINT | "(" sign? UINT ")"
///     primary  := UINT | "rt" "(" sum "," UINT ")" | "sqrt" "(" sum ")" | "(" sum ")"
///     sign     := "+" | "-"
struct Expr {
    enum class Kind { Rational, Rt, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind = Kind::Rational;
    BigRational value;         // Rational
    std::uint64_t index = 0;   // Rt
    std::int64_t power = 0;    // Pow
    std::vector<Expr> children;
    Span span;

    static Expr rational(BigRational v, Span span = {});
    static Expr rt(Expr radicand, std::uint64_t index, Span span = {});
    static Expr neg(Expr operand, Span span = {});
    static Expr binary(Kind kind, Expr lhs, Expr rhs, Span span = {});
    static Expr pow(Expr base, std::int64_t power, Span span = {});

    friend bool operator==(const Expr& a, const Expr& b);
};

/// Throws SyntaxError (offset and expected tokens) or IndexError for a zero
/// or oversized radical index.
Expr parse(std::string_view text);

/// Comma-separated expressions, e.g. `rt(2,2), rt(3,2)`.
std::vector<Expr> parse_list(std::string_view text);

/// Fully parenthesized text that parses back to an equal tree.
std::string render(const Expr& e);

struct LowerOptions {
    std::uint64_t factor_budget = kDefaultFactorBudget;
};

/// Evaluates the tree exactly into a normalized RadicalSum. Radicands,
/// divisors, and bases of negative powers must be rational; violations
/// throw DomainError carrying the offending node's span.
RadicalSum lower(const Expr& e, const LowerOptions& options = {});

} // namespace radicalc
