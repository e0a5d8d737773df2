#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radicalc/sumalg.hpp"

namespace radicalc {

/// The radical root(prime, order).
struct Generator {
    BigInt prime;
    std::uint64_t order = 2;

    bool operator==(const Generator&) const = default;
};

/// A set of radicals root(q_k, eta_k) over distinct primes q_k, kept in
/// ascending prime order. No nonzero exponent tuple with 0 <= e_k < eta_k
/// gives a rational product, since the q_k are distinct primes.
class ReducedSet {
public:
    ReducedSet() = default;
    /// Throws DomainError unless primes are prime, strictly ascending, and
    /// every order is at least 2.
    explicit ReducedSet(std::vector<Generator> generators);

    const std::vector<Generator>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }
    bool empty() const noexcept { return generators_.empty(); }

    /// Each generator as a canonical radical (coefficient 1, one prime).
    std::vector<CanonicalRadical> radicals() const;

    /// `{ 2^(1/108), 3^(1/72) }`; the empty set renders as `{ }`.
    std::string to_string() const;

    bool operator==(const ReducedSet&) const = default;

private:
    std::vector<Generator> generators_;
};

/// Exponent tuple (e_1, ..., e_k) with 0 <= e_j < eta_j.
using ExponentTuple = std::vector<std::uint64_t>;

/// rational_part + sum of coeff * prod_k q_k^(e_k / eta_k).
struct MonomialExpression {
    ReducedSet basis;
    BigRational rational_part;
    std::map<ExponentTuple, BigRational> monomials;

    /// The basis monomial for `tuple` as a canonical radical.
    CanonicalRadical monomial(const ExponentTuple& tuple) const;

    bool operator==(const MonomialExpression&) const = default;
};

/// eta_p = lcm of the denominators of p's exponents across all atoms.
ReducedSet construct_reduced_set(const RadicalSum& s);

/// Throws BasisMismatch when an atom uses a prime missing from `basis` or an
/// exponent whose denominator does not divide the generator's order.
MonomialExpression express_in_basis(const RadicalSum& s, const ReducedSet& basis);

inline constexpr std::uint64_t kDefaultTupleBudget = 1'000'000;

struct ReducedSetVerdict {
    bool reduced = true;
    /// Nonzero tuples examined in lexicographic order, up to and including
    /// the counterexample when there is one.
    std::uint64_t tuples_checked = 0;
    std::optional<ExponentTuple> counterexample;
    /// The rational product for the counterexample.
    std::optional<CanonicalRadical> product;
};

/// Exhaustive check of every nonzero exponent tuple over the candidates'
/// orders. The reported counterexample is the lexicographically first one,
/// independent of `threads`.
///
/// Throws DomainError when a candidate is rational and BudgetExceeded when
/// the product of the orders exceeds `tuple_budget`.
ReducedSetVerdict verify_reduced_set(std::span<const CanonicalRadical> candidates,
                                     std::uint64_t tuple_budget = kDefaultTupleBudget,
                                     unsigned threads = 1);

/// Same, for raw (radicand, index) candidates, each canonicalized first.
ReducedSetVerdict verify_reduced_set(std::span<const std::pair<BigRational, std::uint64_t>> candidates,
                                     std::uint64_t tuple_budget = kDefaultTupleBudget,
                                     unsigned threads = 1,
                                     std::uint64_t factor_budget = kDefaultFactorBudget);

} // namespace radicalc
