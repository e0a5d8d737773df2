#include "radicalc/exprlang.hpp"

namespace radicalc {

namespace {

// Re-raises a span-less library error with the span of the node that caused it.
template <typename Fn>
auto with_span(const Span& span, Fn&& fn)
{
    try {
        return fn();
    } catch (const DomainError& e) {
        if (e.span())
            throw;
        throw DomainError(e.what(), span);
    } catch (const BudgetExceeded& e) {
        if (e.span())
            throw;
        throw BudgetExceeded(e.what(), span);
    }
}

BigRational require_rational(const RadicalSum& s, const Expr& node, const char* role)
{
    if (!s.is_rational())
        throw DomainError(std::string(role) + " is irrational: " + s.to_string(), node.span);
    return s.rational_part();
}

RadicalSum power_of(const RadicalSum& base, std::uint64_t k)
{
    RadicalSum result(BigRational(1));
    RadicalSum square = base;
    while (k != 0) {
        if (k & 1)
            result = result * square;
        k >>= 1;
        if (k != 0)
            square = square * square;
    }
    return result;
}

RadicalSum lower_node(const Expr& e, const LowerOptions& options)
{
    switch (e.kind) {
    case Expr::Kind::Rational:
        return RadicalSum(e.value);
    case Expr::Kind::Rt: {
        const Expr& arg = e.children[0];
        const BigRational radicand = require_rational(lower_node(arg, options), arg, "radicand");
        if (radicand.sign() <= 0)
            throw DomainError("radicand " + radicand.to_string() + " is not positive", arg.span);
        RadicalSum out;
        out.add(BigRational(1), with_span(e.span, [&] {
                    return reduce_radical(radicand, e.index, options.factor_budget);
                }));
        return out;
    }
    case Expr::Kind::Neg:
        return lower_node(e.children[0], options).scaled(BigRational(-1));
    case Expr::Kind::Add:
        return lower_node(e.children[0], options) + lower_node(e.children[1], options);
    case Expr::Kind::Sub:
        return lower_node(e.children[0], options) - lower_node(e.children[1], options);
    case Expr::Kind::Mul:
        return with_span(e.span, [&] {
            return lower_node(e.children[0], options) * lower_node(e.children[1], options);
        });
    case Expr::Kind::Div: {
        const Expr& rhs = e.children[1];
        const BigRational divisor = require_rational(lower_node(rhs, options), rhs, "divisor");
        if (divisor.is_zero())
            throw DomainError("division by zero", rhs.span);
        return lower_node(e.children[0], options).scaled(divisor.inverse());
    }
    case Expr::Kind::Pow: {
        const Expr& base_node = e.children[0];
        RadicalSum base = lower_node(base_node, options);
        if (e.power >= 0)
            return with_span(e.span, [&] { return power_of(base, static_cast<std::uint64_t>(e.power)); });
        const BigRational b = require_rational(base, base_node, "base of a negative power");
        if (b.is_zero())
            throw DomainError("zero raised to a negative power", base_node.span);
        return RadicalSum(b.pow(e.power));
    }
    }
    throw DomainError("unknown expression node", e.span);
}

} // namespace

RadicalSum lower(const Expr& e, const LowerOptions& options)
{
    return lower_node(e, options);
}

} // namespace radicalc
