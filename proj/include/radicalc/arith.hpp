#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace radicalc {

using BigInt = mpz_class;

/// Exact fraction of arbitrary-precision integers.
///
/// Always stored in lowest terms with a positive denominator; zero is 0/1.
/// Structural equality therefore coincides with numeric equality.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : q_(value) {}
    BigRational(const BigInt& value) : q_(value) {}
    /// Throws DomainError when `den` is zero.
    BigRational(const BigInt& num, const BigInt& den);
    explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses the rational text format: `n` or `n/d` in lowest terms with an
    /// optional leading `-`. Throws DomainError on anything else.
    static BigRational parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    BigRational abs() const;
    /// Throws DomainError on zero.
    BigRational inverse() const;
    /// Integer power; negative exponents require a nonzero base.
    BigRational pow(std::int64_t k) const;

    std::string to_string() const;

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& rhs);
    BigRational& operator-=(const BigRational& rhs);
    BigRational& operator*=(const BigRational& rhs);
    /// Throws DomainError when dividing by zero.
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::string to_string(const BigInt& n);

/// Number of bits of |n|; 0 for n = 0.
std::size_t bit_length(const BigInt& n);

/// lcm on machine integers. Throws DomainError when the result overflows.
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// Map prime -> exponent; the empty map is 1.
struct PrimeFactorization {
    std::map<BigInt, std::uint64_t> factors;

    BigInt value() const;
    bool operator==(const PrimeFactorization&) const = default;
};

/// Default work limit for `factorize`: counts trial divisions plus rho steps.
/// Sized so that any integer below 2^64 always factors.
inline constexpr std::uint64_t kDefaultFactorBudget = 20'000'000;

/// Deterministic for n < 3.3e24 (Miller-Rabin over the first 13 prime
/// bases); above that the fixed bases are combined with a BPSW test.
bool is_prime(const BigInt& n);

/// Full prime factorization of n >= 1: trial division by primes up to 10^6,
/// then Brent's rho with fixed seeds. Throws DomainError for n < 1 and
/// BudgetExceeded when `budget` steps do not suffice.
PrimeFactorization factorize(const BigInt& n, std::uint64_t budget = kDefaultFactorBudget);

/// r with r^k = n exactly, if such an integer exists.
std::optional<BigInt> int_nth_root(const BigInt& n, std::uint64_t k);

} // namespace radicalc
