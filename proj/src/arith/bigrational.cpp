#include "radicalc/arith.hpp"

#include <cctype>
#include <limits>

#include "radicalc/errors.hpp"

namespace radicalc {

BigRational::BigRational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

bool canonical_digits(std::string_view s)
{
    return all_digits(s) && (s.size() == 1 || s.front() != '0');
}

} // namespace

BigRational BigRational::parse(std::string_view text)
{
    std::string_view body = text;
    const bool negative = !body.empty() && body.front() == '-';
    if (negative)
        body.remove_prefix(1);

    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    if (!canonical_digits(num_text))
        throw DomainError("malformed rational '" + std::string(text) + "'");
    BigInt num{std::string(num_text), 10};
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        const std::string_view den_text = body.substr(slash + 1);
        if (!canonical_digits(den_text))
            throw DomainError("malformed rational '" + std::string(text) + "'");
        den = BigInt(std::string(den_text), 10);
        if (den < 2 || gcd(num, den) != 1)
            throw DomainError("rational '" + std::string(text) + "' is not in lowest terms");
    }
    if (negative && num == 0)
        throw DomainError("rational '" + std::string(text) + "' has a signed zero");
    if (negative)
        num = -num;
    return BigRational(num, den);
}

BigRational BigRational::abs() const
{
    return BigRational(mpq_class(::abs(q_)));
}

BigRational BigRational::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of zero");
    return BigRational(q_.get_den(), q_.get_num());
}

BigRational BigRational::pow(std::int64_t k) const
{
    if (k == std::numeric_limits<std::int64_t>::min())
        throw DomainError("power exponent is out of range");
    if (k < 0)
        return inverse().pow(-k);
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(k));
    return BigRational(n, d);
}

std::string BigRational::to_string() const
{
    return q_.get_str();
}

BigRational BigRational::operator-() const
{
    return BigRational(mpq_class(-q_));
}

BigRational& BigRational::operator+=(const BigRational& rhs)
{
    q_ += rhs.q_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs)
{
    q_ -= rhs.q_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs)
{
    q_ *= rhs.q_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs)
{
    if (rhs.is_zero())
        throw DomainError("division by zero");
    q_ /= rhs.q_;
    return *this;
}

std::string to_string(const BigInt& n)
{
    return n.get_str();
}

std::size_t bit_length(const BigInt& n)
{
    return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw DomainError("radical index overflows 64 bits");
    return r;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    std::uint64_t x = a, y = b;
    while (y != 0) {
        const std::uint64_t t = x % y;
        x = y;
        y = t;
    }
    return checked_mul(a / x, b);
}

} // namespace radicalc
