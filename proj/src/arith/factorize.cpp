#include <array>
#include <vector>

#include "radicalc/arith.hpp"
#include "radicalc/errors.hpp"

namespace radicalc {

namespace {

constexpr unsigned kTrialLimit = 1'000'000;

const std::vector<unsigned>& trial_primes()
{
    static const std::vector<unsigned> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<unsigned> out;
        for (unsigned i = 2; i <= kTrialLimit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

constexpr std::array<unsigned, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const BigInt& n, unsigned base)
{
    BigInt d = n - 1;
    const auto s = mpz_scan1(d.get_mpz_t(), 0);
    d >>= s;
    BigInt x;
    const BigInt a = base;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1)
        return true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == n - 1)
            return true;
    }
    return false;
}

class StepCounter {
public:
    StepCounter(std::uint64_t budget, const BigInt& n) : left_(budget), n_(n) {}

    void tick()
    {
        if (left_ == 0)
            throw BudgetExceeded("factorization of " + n_.get_str() + " exceeded its step budget");
        --left_;
    }

private:
    std::uint64_t left_;
    const BigInt& n_;
};

// Brent's cycle-finding variant of Pollard rho; returns a nontrivial factor
// of the odd composite `n`, which is not a perfect power.
BigInt rho_factor(const BigInt& n, StepCounter& steps)
{
    constexpr unsigned kBatch = 128;
    for (unsigned long c = 1;; ++c) {
        const auto step = [&](const BigInt& v) -> BigInt { return (v * v + c) % n; };
        BigInt y = 2, x, ys, q = 1, g = 1;
        std::uint64_t r = 1;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = step(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                const std::uint64_t limit = std::min<std::uint64_t>(kBatch, r - k);
                for (std::uint64_t i = 0; i < limit; ++i) {
                    steps.tick();
                    y = step(y);
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += kBatch;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);

        if (g == n) {
            do {
                steps.tick();
                ys = step(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

std::optional<std::pair<BigInt, unsigned long>> perfect_power(const BigInt& n)
{
    if (mpz_perfect_power_p(n.get_mpz_t()) == 0)
        return std::nullopt;
    const auto bits = bit_length(n);
    for (unsigned long k = bits; k >= 2; --k) {
        BigInt r;
        if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0 && r > 1)
            return std::make_pair(r, k);
    }
    return std::nullopt;
}

} // namespace

BigInt PrimeFactorization::value() const
{
    BigInt out = 1;
    for (const auto& [p, e] : factors) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        out *= pe;
    }
    return out;
}

bool is_prime(const BigInt& n)
{
    if (n < 2)
        return false;
    for (unsigned p : kWitnesses) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0)
            return false;
    }
    // First 12 bases: deterministic below 2^64; all 13: below 3.3e24.
    for (unsigned base : kWitnesses)
        if (!miller_rabin(n, base))
            return false;
    static const BigInt kDeterministicBound("3317044064679887385961981");
    if (n < kDeterministicBound)
        return true;
    return mpz_probab_prime_p(n.get_mpz_t(), 24) != 0;
}

PrimeFactorization factorize(const BigInt& n, std::uint64_t budget)
{
    if (n < 1)
        throw DomainError("cannot factorize " + n.get_str() + ": expected a positive integer");

    StepCounter steps(budget, n);
    PrimeFactorization out;
    BigInt rest = n;
    bool cofactor_is_prime = false;
    for (unsigned p : trial_primes()) {
        if (rest == 1)
            break;
        if (BigInt(p) * p > rest) {
            cofactor_is_prime = true;
            break;
        }
        steps.tick();
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++out.factors[BigInt(p)];
        }
    }
    if (rest == 1)
        return out;
    if (cofactor_is_prime) {
        ++out.factors[rest];
        return out;
    }

    std::vector<std::pair<BigInt, std::uint64_t>> pending{{rest, 1}};
    while (!pending.empty()) {
        auto [m, mult] = std::move(pending.back());
        pending.pop_back();
        if (is_prime(m)) {
            out.factors[m] += mult;
            continue;
        }
        if (auto pp = perfect_power(m)) {
            pending.emplace_back(pp->first, mult * pp->second);
            continue;
        }
        BigInt d = rho_factor(m, steps);
        BigInt e = m / d;
        pending.emplace_back(std::move(d), mult);
        pending.emplace_back(std::move(e), mult);
    }
    return out;
}

std::optional<BigInt> int_nth_root(const BigInt& n, std::uint64_t k)
{
    if (n < 1 || k < 1)
        throw DomainError("int_nth_root needs n >= 1 and k >= 1");
    if (k == 1)
        return n;
    if (k > bit_length(n))
        return n == 1 ? std::optional<BigInt>(1) : std::nullopt;
    BigInt r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k)) != 0)
        return r;
    return std::nullopt;
}

} // namespace radicalc
