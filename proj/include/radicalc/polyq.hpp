#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radicalc/radical.hpp"

namespace radicalc {

/// Dense univariate polynomial over Q; coeffs()[i] multiplies X^i and the
/// last stored coefficient is never zero.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<BigRational> coeffs);

    static PolyQ constant(const BigRational& c) { return PolyQ({c}); }
    /// c * X^degree.
    static PolyQ monomial(const BigRational& c, std::size_t degree);

    const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    const BigRational& leading() const;
    BigRational coeff(std::size_t i) const;

    PolyQ monic() const;
    BigRational eval(const BigRational& x) const;

    /// Descending powers, zero terms omitted: `X^8 - 12`, `-1/2*X^2 + X`.
    std::string to_string() const;

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    bool operator==(const PolyQ&) const = default;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Quotient and remainder of f by a nonzero g. Throws DomainError on g = 0.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& f, const PolyQ& g);

/// Monic gcd by the Euclidean algorithm, remainders made monic each step.
/// Throws DomainError when both inputs are zero.
PolyQ poly_gcd(const PolyQ& f, const PolyQ& g);

/// root(radicand, index)^power.
struct RadicalFactor {
    BigRational radicand;
    std::uint64_t index = 1;
    std::uint64_t power = 1;
};

/// Minimal polynomial over Q of the product c of the factors: X - c when c is
/// rational, else X^s - c^s with s the order of c's atom.
PolyQ minimal_polynomial(std::span<const RadicalFactor> factors,
                         std::uint64_t factor_budget = kDefaultFactorBudget);
PolyQ minimal_polynomial(const CanonicalRadical& c);

} // namespace radicalc
