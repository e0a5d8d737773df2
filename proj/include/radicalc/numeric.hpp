#pragma once

#include <cstdint>
#include <string>

#include "radicalc/polyq.hpp"
#include "radicalc/sumalg.hpp"

namespace radicalc {

inline constexpr unsigned kDefaultPrecisionBits = 128;

/// A certified enclosure (mantissa ± error_ulps) * 2^exponent.
///
/// Every operation below widens error_ulps enough to cover its own
/// rounding, so the true value is always inside [lower(), upper()].
struct Approx {
    BigInt mantissa;
    std::int64_t exponent = 0;
    BigInt error_ulps;

    static Approx exact_integer(const BigInt& n) { return {n, 0, 0}; }
    /// Exact when q is dyadic, otherwise rounded to about `bits` bits.
    static Approx from_rational(const BigRational& q, unsigned bits);

    bool is_exact() const { return error_ulps == 0; }
    BigRational midpoint() const;
    BigRational error_bound() const;
    BigRational lower() const { return midpoint() - error_bound(); }
    BigRational upper() const { return midpoint() + error_bound(); }
    BigRational width() const { return error_bound() * BigRational(2); }
    bool contains(const BigRational& x) const { return lower() <= x && x <= upper(); }
    /// True when 0 lies outside the enclosure.
    bool excludes_zero() const { return abs(mantissa) > error_ulps; }

    /// Rounds the mantissa to at most `bits` significant bits.
    Approx rounded(unsigned bits) const;

    /// `1.4142135623730950488 ± 2^-60`: the printed decimal has only as many
    /// digits as the enclosure supports and the suffix bounds the distance
    /// from the printed value to the true one. Exact values print `x ± 0`.
    std::string to_string() const;
};

Approx operator+(const Approx& a, const Approx& b);
Approx operator-(const Approx& a);
Approx operator-(const Approx& a, const Approx& b);
/// Exact product of the enclosures (no rounding); call rounded() after.
Approx operator*(const Approx& a, const Approx& b);

Approx mul(const Approx& a, const Approx& b, unsigned bits);
Approx mul(const Approx& a, const BigRational& q, unsigned bits);
/// Throws DomainError when the enclosure contains zero.
Approx reciprocal(const Approx& a, unsigned bits);
Approx pow(const Approx& a, std::uint64_t k, unsigned bits);

/// root(b, m) with relative error below 2^-(bits-4), from an integer m-th
/// root of the scaled radicand. Throws DomainError on b <= 0, m = 0 or
/// bits < 16.
Approx eval_radical(const BigRational& radicand, std::uint64_t index, unsigned bits);
Approx eval_atom(const RadicalAtom& atom, unsigned bits);
Approx eval_canonical(const CanonicalRadical& r, unsigned bits);
/// Sum of termwise enclosures; the bound is absolute, not relative.
Approx eval_sum(const RadicalSum& s, unsigned bits);
/// Direct evaluation of an unnormalized term list, one root per term.
Approx eval_terms(std::span<const RadicalTerm> terms, unsigned bits);
/// Horner evaluation of p on the enclosure x.
Approx eval_poly(const PolyQ& p, const Approx& x, unsigned bits);

enum class Separation {
    /// Proof: no rational with denominator <= q_max lies in the enclosure.
    Excluded,
    /// Inconclusive: some such rational is inside.
    NotExcluded,
};

/// Decides whether the enclosure avoids every rational with denominator at
/// most q_max by finding the smallest-denominator rational inside it.
/// Throws PrecisionInsufficient when the half-width is not below
/// 1 / (2 q_max^2), half the minimal gap between such rationals.
Separation separated_from_rational(const Approx& a, const BigInt& q_max);

} // namespace radicalc
