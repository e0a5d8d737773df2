#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radicalc/radical.hpp"

namespace radicalc {

/// One raw input term: coeff * root(radicand, index).
struct RadicalTerm {
    BigRational coeff;
    BigRational radicand;
    std::uint64_t index = 1;

    bool operator==(const RadicalTerm&) const = default;
};

/// A rational-linear combination of distinct canonical radical atoms plus a
/// rational part. Stored coefficients are never zero, so a sum is rational
/// exactly when it has no terms.
class RadicalSum {
public:
    using TermMap = std::map<RadicalAtom, BigRational>;

    RadicalSum() = default;
    explicit RadicalSum(BigRational rational_part) : rational_part_(std::move(rational_part)) {}

    const BigRational& rational_part() const noexcept { return rational_part_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_rational() const noexcept { return terms_.empty(); }

    /// Adds coeff * r, merging like atoms and dropping cancelled terms.
    void add(const BigRational& coeff, const CanonicalRadical& r);
    void add(const RadicalSum& other);

    RadicalSum scaled(const BigRational& factor) const;
    /// Distributes over both sums, multiplying atoms with atom_mul.
    RadicalSum multiplied(const RadicalSum& other) const;

    /// Inverse of normalization: each atom of order L becomes
    /// coeff * root(atom^L, L); the rational part becomes root(r, 1).
    std::vector<RadicalTerm> to_terms() const;

    std::string to_string() const;

    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b)
    {
        a.add(b);
        return a;
    }
    friend RadicalSum operator-(const RadicalSum& a, const RadicalSum& b) { return a + b.scaled(-1); }
    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) { return a.multiplied(b); }
    bool operator==(const RadicalSum&) const = default;

private:
    BigRational rational_part_;
    TermMap terms_;
};

RadicalSum normalize_sum(std::span<const RadicalTerm> terms,
                         std::uint64_t factor_budget = kDefaultFactorBudget);

/// The value of `s` when it is rational, otherwise nullopt. A nonempty
/// normalized sum is certified irrational: its terms cannot cancel.
std::optional<BigRational> is_rational(const RadicalSum& s);

/// Builds l_0 + l_1 x + ... + l_t x^t for x = root(b, m) and returns its
/// rationality verdict. Requires x to reduce to an atom of order exactly m,
/// 1 <= t < m and l_t != 0; throws DomainError otherwise.
std::optional<BigRational> radical_power_sum_check(const BigRational& radicand, std::uint64_t index,
                                        std::span<const BigRational> coeffs,
                                        std::uint64_t factor_budget = kDefaultFactorBudget);

} // namespace radicalc
