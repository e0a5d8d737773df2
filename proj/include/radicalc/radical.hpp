#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "radicalc/arith.hpp"

namespace radicalc {

/// A fractional exponent num/den with 0 < num < den and gcd(num, den) = 1.
struct Exponent {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    bool operator==(const Exponent&) const = default;
    friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b)
    {
        const auto lhs = static_cast<unsigned __int128>(a.num) * b.den;
        const auto rhs = static_cast<unsigned __int128>(b.num) * a.den;
        return lhs <=> rhs;
    }
    std::string to_string() const;
};

/// The irrational part of a canonical radical: the product of p^(a/d) over a
/// nonempty set of distinct primes, each exponent strictly inside (0, 1).
///
/// The order of the atom (lcm of the exponent denominators) is the smallest
/// index n such that the atom is an n-th root of a rational; no power below
/// it is rational.
class RadicalAtom {
public:
    using ExponentMap = std::map<BigInt, Exponent>;

    /// Validates the invariants; throws DomainError when the map is empty,
    /// a key is not prime, or an exponent is outside (0, 1) or unreduced.
    explicit RadicalAtom(ExponentMap exps);

    const ExponentMap& exponents() const noexcept { return exps_; }
    std::uint64_t order() const;

    /// `p^(a/d)` factors joined by `*`, ascending primes.
    std::string to_string() const;

    bool operator==(const RadicalAtom&) const = default;
    /// Lexicographic over the ascending (prime, exponent) lists.
    friend std::strong_ordering operator<=>(const RadicalAtom& a, const RadicalAtom& b);

private:
    struct Unchecked {};
    RadicalAtom(Unchecked, ExponentMap exps) : exps_(std::move(exps)) {}
    friend class MonomialBuilder;

    ExponentMap exps_;
};

/// coeff * atom with coeff > 0; rational exactly when the atom is absent.
struct CanonicalRadical {
    BigRational coeff{1};
    std::optional<RadicalAtom> atom;

    bool is_rational() const { return !atom.has_value(); }
    /// `q`, `q*<atom>`, or `<atom>` when q = 1.
    std::string to_string() const;

    bool operator==(const CanonicalRadical&) const = default;
};

/// Canonical form of the real m-th root of b > 0. Denominators are cleared
/// (b = f/s gives (1/s) * root(f * s^(m-1), m)), the radicand is factored and
/// each prime's exponent is split into an integer part, moved into the
/// coefficient, and a reduced fractional part kept in the atom.
///
/// Throws DomainError for b <= 0 or m = 0; BudgetExceeded from factorize.
CanonicalRadical reduce_radical(const BigRational& radicand, std::uint64_t index,
                                std::uint64_t factor_budget = kDefaultFactorBudget);

CanonicalRadical atom_mul(const CanonicalRadical& x, const CanonicalRadical& y);
CanonicalRadical atom_pow(const CanonicalRadical& x, std::uint64_t k);

} // namespace radicalc
