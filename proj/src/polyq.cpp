#include "radicalc/polyq.hpp"

#include "radicalc/errors.hpp"

namespace radicalc {

PolyQ::PolyQ(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

void PolyQ::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

PolyQ PolyQ::monomial(const BigRational& c, std::size_t degree)
{
    std::vector<BigRational> coeffs(degree + 1);
    coeffs[degree] = c;
    return PolyQ(std::move(coeffs));
}

std::optional<std::size_t> PolyQ::degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

const BigRational& PolyQ::leading() const
{
    if (coeffs_.empty())
        throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

BigRational PolyQ::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : BigRational();
}

PolyQ PolyQ::monic() const
{
    if (coeffs_.empty())
        return *this;
    const BigRational lead = coeffs_.back();
    std::vector<BigRational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(c / lead);
    return PolyQ(std::move(out));
}

BigRational PolyQ::eval(const BigRational& x) const
{
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::string PolyQ::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigRational& c = coeffs_[i];
        if (c.is_zero())
            continue;
        const bool negative = c.sign() < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const BigRational magnitude = c.abs();
        if (i == 0) {
            out += magnitude.to_string();
            continue;
        }
        if (magnitude != BigRational(1))
            out += magnitude.to_string() + "*";
        out += i == 1 ? "X" : "X^" + std::to_string(i);
    }
    return out;
}

PolyQ operator+(const PolyQ& a, const PolyQ& b)
{
    std::vector<BigRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.coeff(i) + b.coeff(i);
    return PolyQ(std::move(out));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b)
{
    std::vector<BigRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.coeff(i) - b.coeff(i);
    return PolyQ(std::move(out));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b)
{
    if (a.is_zero() || b.is_zero())
        return PolyQ();
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyQ(std::move(out));
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& f, const PolyQ& g)
{
    if (g.is_zero())
        throw DomainError("polynomial division by zero");
    std::vector<BigRational> rem = f.coeffs();
    const std::size_t dg = *g.degree();
    if (rem.size() <= dg)
        return {PolyQ(), f};
    std::vector<BigRational> quot(rem.size() - dg);
    const BigRational& lead = g.leading();
    for (std::size_t i = rem.size(); i-- > dg;) {
        if (rem[i].is_zero())
            continue;
        const BigRational factor = rem[i] / lead;
        quot[i - dg] = factor;
        for (std::size_t j = 0; j <= dg; ++j)
            rem[i - dg + j] -= factor * g.coeffs()[j];
    }
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ poly_gcd(const PolyQ& f, const PolyQ& g)
{
    if (f.is_zero() && g.is_zero())
        throw DomainError("gcd of two zero polynomials is undefined");
    PolyQ a = f.monic();
    PolyQ b = g.monic();
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PolyQ minimal_polynomial(const CanonicalRadical& c)
{
    if (!c.atom)
        return PolyQ({-c.coeff, BigRational(1)});
    const std::uint64_t s = c.atom->order();
    const CanonicalRadical power = atom_pow(c, s);
    // order(atom) makes c^s rational by construction.
    return PolyQ::monomial(BigRational(1), s) - PolyQ::constant(power.coeff);
}

PolyQ minimal_polynomial(std::span<const RadicalFactor> factors, std::uint64_t factor_budget)
{
    CanonicalRadical c;
    for (const auto& f : factors)
        c = atom_mul(c, atom_pow(reduce_radical(f.radicand, f.index, factor_budget), f.power));
    return minimal_polynomial(c);
}

} // namespace radicalc
