#include "radicalc/sumalg.hpp"

#include "radicalc/errors.hpp"

namespace radicalc {

void RadicalSum::add(const BigRational& coeff, const CanonicalRadical& r)
{
    if (coeff.is_zero())
        return;
    const BigRational c = coeff * r.coeff;
    if (!r.atom) {
        rational_part_ += c;
        return;
    }
    auto [it, inserted] = terms_.try_emplace(*r.atom, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

void RadicalSum::add(const RadicalSum& other)
{
    rational_part_ += other.rational_part_;
    for (const auto& [atom, c] : other.terms_)
        add(c, CanonicalRadical{BigRational(1), atom});
}

RadicalSum RadicalSum::scaled(const BigRational& factor) const
{
    RadicalSum out;
    if (factor.is_zero())
        return out;
    out.rational_part_ = rational_part_ * factor;
    for (const auto& [atom, c] : terms_)
        out.terms_.emplace(atom, c * factor);
    return out;
}

RadicalSum RadicalSum::multiplied(const RadicalSum& other) const
{
    RadicalSum out = other.scaled(rational_part_);
    for (const auto& [atom, c] : terms_) {
        const CanonicalRadical lhs{BigRational(1), atom};
        out.add(c * other.rational_part_, lhs);
        for (const auto& [atom2, c2] : other.terms_)
            out.add(c * c2, atom_mul(lhs, CanonicalRadical{BigRational(1), atom2}));
    }
    return out;
}

std::vector<RadicalTerm> RadicalSum::to_terms() const
{
    std::vector<RadicalTerm> out;
    if (!rational_part_.is_zero())
        out.push_back({rational_part_, BigRational(1), 1});
    for (const auto& [atom, c] : terms_) {
        const std::uint64_t order = atom.order();
        const CanonicalRadical power = atom_pow(CanonicalRadical{BigRational(1), atom}, order);
        out.push_back({c, power.coeff, order});
    }
    return out;
}

std::string RadicalSum::to_string() const
{
    if (terms_.empty())
        return rational_part_.to_string();
    std::string out;
    if (!rational_part_.is_zero())
        out = rational_part_.to_string();
    for (const auto& [atom, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const BigRational magnitude = c.abs();
        if (magnitude != BigRational(1))
            out += magnitude.to_string() + "*";
        out += atom.to_string();
    }
    return out;
}

RadicalSum normalize_sum(std::span<const RadicalTerm> terms, std::uint64_t factor_budget)
{
    RadicalSum out;
    for (const auto& t : terms)
        out.add(t.coeff, reduce_radical(t.radicand, t.index, factor_budget));
    return out;
}

std::optional<BigRational> is_rational(const RadicalSum& s)
{
    if (s.is_rational())
        return s.rational_part();
    return std::nullopt;
}

std::optional<BigRational> radical_power_sum_check(const BigRational& radicand, std::uint64_t index,
                                        std::span<const BigRational> coeffs,
                                        std::uint64_t factor_budget)
{
    const CanonicalRadical x = reduce_radical(radicand, index, factor_budget);
    if (!x.atom || x.atom->order() != index)
        throw DomainError("root(" + radicand.to_string() + ", " + std::to_string(index) +
                          ") is not a reduced irrational of order " + std::to_string(index));
    if (coeffs.size() < 2 || coeffs.size() > index)
        throw DomainError("expected coefficients l_0..l_t with 1 <= t < m");
    if (coeffs.back().is_zero())
        throw DomainError("leading coefficient l_t must be nonzero");

    RadicalSum sum;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        sum.add(coeffs[j], atom_pow(x, j));
    return is_rational(sum);
}

} // namespace radicalc
