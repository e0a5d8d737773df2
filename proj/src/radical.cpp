#include "radicalc/radical.hpp"

#include <limits>
#include <numeric>

#include "radicalc/errors.hpp"

namespace radicalc {

std::string Exponent::to_string() const
{
    return std::to_string(num) + "/" + std::to_string(den);
}

RadicalAtom::RadicalAtom(ExponentMap exps) : exps_(std::move(exps))
{
    if (exps_.empty())
        throw DomainError("a radical atom needs at least one prime");
    for (const auto& [p, e] : exps_) {
        if (!is_prime(p))
            throw DomainError("atom base " + p.get_str() + " is not prime");
        if (e.num == 0 || e.num >= e.den || std::gcd(e.num, e.den) != 1)
            throw DomainError("atom exponent " + e.to_string() + " is not a reduced fraction in (0, 1)");
    }
}

std::uint64_t RadicalAtom::order() const
{
    std::uint64_t n = 1;
    for (const auto& [p, e] : exps_)
        n = checked_lcm(n, e.den);
    return n;
}

std::string RadicalAtom::to_string() const
{
    std::string out;
    for (const auto& [p, e] : exps_) {
        if (!out.empty())
            out += '*';
        out += p.get_str() + "^(" + e.to_string() + ")";
    }
    return out;
}

std::strong_ordering operator<=>(const RadicalAtom& a, const RadicalAtom& b)
{
    auto ia = a.exps_.begin();
    auto ib = b.exps_.begin();
    for (; ia != a.exps_.end() && ib != b.exps_.end(); ++ia, ++ib) {
        if (const int c = cmp(ia->first, ib->first); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (const auto c = ia->second <=> ib->second; c != 0)
            return c;
    }
    if (ia == a.exps_.end())
        return ib == b.exps_.end() ? std::strong_ordering::equal : std::strong_ordering::less;
    return std::strong_ordering::greater;
}

std::string CanonicalRadical::to_string() const
{
    if (!atom)
        return coeff.to_string();
    if (coeff == BigRational(1))
        return atom->to_string();
    return coeff.to_string() + "*" + atom->to_string();
}

// Accumulates p^(n/d) factors with arbitrary nonnegative fractional
// exponents and splits them into rational coefficient and reduced atom.
class MonomialBuilder {
public:
    explicit MonomialBuilder(BigRational coeff) : coeff_(std::move(coeff)) {}

    /// Multiplies by p^(n/d); n may exceed d.
    void add(const BigInt& p, unsigned __int128 n, std::uint64_t d)
    {
        const unsigned __int128 whole = n / d;
        if (whole != 0) {
            if (whole > std::numeric_limits<unsigned long>::max())
                throw DomainError("exponent of " + p.get_str() + " is too large");
            BigInt pw;
            mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(whole));
            coeff_ *= BigRational(pw);
        }
        auto frac = static_cast<std::uint64_t>(n % d);
        if (frac == 0)
            return;
        const std::uint64_t g = std::gcd(frac, d);
        exps_.emplace(p, Exponent{frac / g, d / g});
    }

    CanonicalRadical finish() &&
    {
        CanonicalRadical out;
        out.coeff = std::move(coeff_);
        if (!exps_.empty())
            out.atom = RadicalAtom(RadicalAtom::Unchecked{}, std::move(exps_));
        return out;
    }

private:
    BigRational coeff_;
    RadicalAtom::ExponentMap exps_;
};

CanonicalRadical reduce_radical(const BigRational& radicand, std::uint64_t index,
                                std::uint64_t factor_budget)
{
    if (radicand.sign() <= 0)
        throw DomainError("radicand " + radicand.to_string() + " is not positive");
    if (index == 0)
        throw DomainError("radical index must be at least 1");
    if (index == 1)
        return CanonicalRadical{radicand, std::nullopt};

    const BigInt f = radicand.num();
    const BigInt s = radicand.den();
    MonomialBuilder builder(BigRational(BigInt(1), s));
    // f and s are coprime, so each prime comes from exactly one of them;
    // its exponent in f * s^(m-1) is delta_f or (m-1) * delta_s.
    for (const auto& [p, e] : factorize(f, factor_budget).factors)
        builder.add(p, e, index);
    for (const auto& [p, e] : factorize(s, factor_budget).factors)
        builder.add(p, static_cast<unsigned __int128>(e) * (index - 1), index);
    return std::move(builder).finish();
}

CanonicalRadical atom_mul(const CanonicalRadical& x, const CanonicalRadical& y)
{
    MonomialBuilder builder(x.coeff * y.coeff);
    static const RadicalAtom::ExponentMap kEmpty;
    const auto& ex = x.atom ? x.atom->exponents() : kEmpty;
    const auto& ey = y.atom ? y.atom->exponents() : kEmpty;
    auto ix = ex.begin();
    auto iy = ey.begin();
    while (ix != ex.end() || iy != ey.end()) {
        if (iy == ey.end() || (ix != ex.end() && ix->first < iy->first)) {
            builder.add(ix->first, ix->second.num, ix->second.den);
            ++ix;
        } else if (ix == ex.end() || iy->first < ix->first) {
            builder.add(iy->first, iy->second.num, iy->second.den);
            ++iy;
        } else {
            const std::uint64_t d = checked_lcm(ix->second.den, iy->second.den);
            const unsigned __int128 n =
                static_cast<unsigned __int128>(ix->second.num) * (d / ix->second.den) +
                static_cast<unsigned __int128>(iy->second.num) * (d / iy->second.den);
            builder.add(ix->first, n, d);
            ++ix;
            ++iy;
        }
    }
    return std::move(builder).finish();
}

CanonicalRadical atom_pow(const CanonicalRadical& x, std::uint64_t k)
{
    if (k == 0)
        return CanonicalRadical{};
    if (k > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw DomainError("power exponent is too large");
    MonomialBuilder builder(x.coeff.pow(static_cast<std::int64_t>(k)));
    if (x.atom)
        for (const auto& [p, e] : x.atom->exponents())
            builder.add(p, static_cast<unsigned __int128>(e.num) * k, e.den);
    return std::move(builder).finish();
}

} // namespace radicalc
