#include "radicalc/numeric.hpp"

#include <algorithm>
#include <limits>

#include "radicalc/errors.hpp"

namespace radicalc {

namespace {

BigInt shl(const BigInt& n, std::uint64_t k)
{
    BigInt out;
    mpz_mul_2exp(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

// Ceiling of n / 2^k for n >= 0.
BigInt cdiv_pow2(const BigInt& n, std::uint64_t k)
{
    BigInt out;
    mpz_cdiv_q_2exp(out.get_mpz_t(), n.get_mpz_t(), k);
    return out;
}

BigRational pow2(std::int64_t k)
{
    return k >= 0 ? BigRational(shl(1, static_cast<std::uint64_t>(k)))
                  : BigRational(BigInt(1), shl(1, static_cast<std::uint64_t>(-k)));
}

// Nearest integer to n/d, ties away from zero; d > 0.
BigInt round_div(const BigInt& n, const BigInt& d)
{
    BigInt twice = 2 * n + (n < 0 ? -d : d);
    BigInt q;
    mpz_tdiv_q(q.get_mpz_t(), twice.get_mpz_t(), BigInt(2 * d).get_mpz_t());
    return q;
}

// floor(log2(q)) for q > 0.
std::int64_t floor_log2(const BigRational& q)
{
    const BigInt n = q.num();
    const BigInt d = q.den();
    std::int64_t l = static_cast<std::int64_t>(bit_length(n)) - static_cast<std::int64_t>(bit_length(d));
    const bool at_least = l >= 0 ? n >= shl(d, static_cast<std::uint64_t>(l))
                                 : shl(n, static_cast<std::uint64_t>(-l)) >= d;
    return at_least ? l : l - 1;
}

// Smallest k with 2^k >= q, q > 0.
std::int64_t ceil_log2(const BigRational& q)
{
    std::int64_t k = floor_log2(q);
    return pow2(k) == q ? k : k + 1;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

bool is_power_of_two(const BigInt& n)
{
    return n > 0 && mpz_popcount(n.get_mpz_t()) == 1;
}

// Smallest-denominator rational in the closed interval [lo, hi].
BigRational simplest_between(BigRational lo, BigRational hi)
{
    BigRational offset;
    std::vector<BigInt> partial;
    // Continued-fraction descent: peel off common integer parts until an
    // integer fits, then fold back.
    for (;;) {
        BigInt fl;
        mpz_fdiv_q(fl.get_mpz_t(), lo.raw().get_num_mpz_t(), lo.raw().get_den_mpz_t());
        if (BigRational(fl) == lo) {
            partial.push_back(fl);
            break;
        }
        if (BigRational(BigInt(fl + 1)) <= hi) {
            partial.push_back(BigInt(fl + 1));
            break;
        }
        partial.push_back(fl);
        BigRational next_lo = (hi - BigRational(fl)).inverse();
        BigRational next_hi = (lo - BigRational(fl)).inverse();
        lo = std::move(next_lo);
        hi = std::move(next_hi);
    }
    BigRational value(partial.back());
    for (std::size_t i = partial.size() - 1; i-- > 0;)
        value = BigRational(partial[i]) + value.inverse();
    return value;
}

} // namespace

Approx Approx::from_rational(const BigRational& q, unsigned bits)
{
    const BigInt n = q.num();
    const BigInt d = q.den();
    if (is_power_of_two(d))
        return {n, -static_cast<std::int64_t>(bit_length(d) - 1), 0};
    const std::int64_t f = static_cast<std::int64_t>(bits) + static_cast<std::int64_t>(bit_length(d)) -
                           static_cast<std::int64_t>(bit_length(n)) + 2;
    BigInt m = f >= 0 ? round_div(shl(n, static_cast<std::uint64_t>(f)), d)
                      : round_div(n, shl(d, static_cast<std::uint64_t>(-f)));
    return {m, -f, 1};
}

BigRational Approx::midpoint() const
{
    return BigRational(mantissa) * pow2(exponent);
}

BigRational Approx::error_bound() const
{
    return BigRational(error_ulps) * pow2(exponent);
}

Approx Approx::rounded(unsigned bits) const
{
    const std::size_t len = bit_length(mantissa);
    if (len <= bits)
        return *this;
    const std::uint64_t k = len - bits;
    BigInt m;
    const bool exact_shift = mpz_scan1(mantissa.get_mpz_t(), 0) >= k;
    BigInt biased = mantissa + shl(1, k - 1);
    mpz_fdiv_q_2exp(m.get_mpz_t(), biased.get_mpz_t(), k);
    BigInt err = cdiv_pow2(error_ulps, k);
    if (!exact_shift)
        err += 1;
    return {m, exponent + static_cast<std::int64_t>(k), err};
}

Approx operator+(const Approx& a, const Approx& b)
{
    if (a.mantissa == 0 && a.error_ulps == 0)
        return b;
    if (b.mantissa == 0 && b.error_ulps == 0)
        return a;
    const std::int64_t e = std::min(a.exponent, b.exponent);
    const auto sa = static_cast<std::uint64_t>(a.exponent - e);
    const auto sb = static_cast<std::uint64_t>(b.exponent - e);
    return {shl(a.mantissa, sa) + shl(b.mantissa, sb), e, shl(a.error_ulps, sa) + shl(b.error_ulps, sb)};
}

Approx operator-(const Approx& a)
{
    return {-a.mantissa, a.exponent, a.error_ulps};
}

Approx operator-(const Approx& a, const Approx& b)
{
    return a + (-b);
}

Approx operator*(const Approx& a, const Approx& b)
{
    const BigInt ma = abs(a.mantissa);
    const BigInt mb = abs(b.mantissa);
    return {a.mantissa * b.mantissa, a.exponent + b.exponent,
            ma * b.error_ulps + mb * a.error_ulps + a.error_ulps * b.error_ulps};
}

Approx mul(const Approx& a, const Approx& b, unsigned bits)
{
    return (a * b).rounded(bits);
}

Approx mul(const Approx& a, const BigRational& q, unsigned bits)
{
    const BigInt n = q.num();
    const BigInt d = q.den();
    BigInt m = a.mantissa * n;
    BigInt err = a.error_ulps * abs(n);
    if (d == 1)
        return Approx{m, a.exponent, err}.rounded(bits);
    const std::int64_t g = std::max<std::int64_t>(
        0, static_cast<std::int64_t>(bits) + static_cast<std::int64_t>(bit_length(d)) -
               static_cast<std::int64_t>(bit_length(m)) + 2);
    const auto ug = static_cast<std::uint64_t>(g);
    const BigInt scaled = shl(m, ug);
    BigInt out = round_div(scaled, d);
    BigInt out_err;
    const BigInt scaled_err = shl(err, ug);
    mpz_cdiv_q(out_err.get_mpz_t(), scaled_err.get_mpz_t(), d.get_mpz_t());
    if (out * d != scaled)
        out_err += 1;
    return Approx{out, a.exponent - g, out_err}.rounded(bits);
}

Approx reciprocal(const Approx& a, unsigned bits)
{
    if (!a.excludes_zero())
        throw DomainError("reciprocal of an enclosure that contains zero");
    const BigInt m = abs(a.mantissa);
    const std::uint64_t g = bits + bit_length(m) + 2;
    const BigInt one = shl(1, g);
    BigInt r = round_div(one, m);
    // |1/(m +- e) - 1/m| <= e / (m (m - e)), in units of 2^-g.
    BigInt err;
    const BigInt num = shl(a.error_ulps, g);
    const BigInt den = m * (m - a.error_ulps);
    mpz_cdiv_q(err.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r * m != one)
        err += 1;
    if (a.mantissa < 0)
        r = -r;
    return Approx{r, -static_cast<std::int64_t>(g) - a.exponent, err}.rounded(bits);
}

Approx pow(const Approx& a, std::uint64_t k, unsigned bits)
{
    Approx result = Approx::exact_integer(1);
    Approx base = a;
    while (k != 0) {
        if (k & 1)
            result = mul(result, base, bits);
        k >>= 1;
        if (k != 0)
            base = mul(base, base, bits);
    }
    return result;
}

Approx eval_radical(const BigRational& radicand, std::uint64_t index, unsigned bits)
{
    if (radicand.sign() <= 0)
        throw DomainError("radicand " + radicand.to_string() + " is not positive");
    if (index == 0)
        throw DomainError("radical index must be at least 1");
    if (bits < 16)
        throw DomainError("precision must be at least 16 bits");

    if (index > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw DomainError("radical index too large");
    const auto m = static_cast<std::int64_t>(index);
    const std::int64_t f = static_cast<std::int64_t>(bits) - 4 - floor_div(floor_log2(radicand), m);
    // N = floor(b * 2^(m f)); then floor(N^(1/m)) = floor(b^(1/m) * 2^f).
    const BigInt n = radicand.num();
    const BigInt d = radicand.den();
    std::int64_t shift = 0;
    if (__builtin_mul_overflow(m, f, &shift))
        throw DomainError("radical index too large for the requested precision");
    BigInt top = shift >= 0 ? shl(n, static_cast<std::uint64_t>(shift)) : n;
    BigInt bottom = shift >= 0 ? d : shl(d, static_cast<std::uint64_t>(-shift));
    BigInt big_n, rem;
    mpz_fdiv_qr(big_n.get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());
    BigInt r;
    const bool exact_root = mpz_root(r.get_mpz_t(), big_n.get_mpz_t(), index) != 0;
    if (exact_root && rem == 0)
        return {r, -f, 0};
    return {2 * r + 1, -f - 1, 1};
}

Approx eval_atom(const RadicalAtom& atom, unsigned bits)
{
    const std::uint64_t order = atom.order();
    BigInt radicand = 1;
    for (const auto& [p, e] : atom.exponents()) {
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), e.num * (order / e.den));
        radicand *= pw;
    }
    return eval_radical(BigRational(radicand), order, bits);
}


Approx eval_canonical(const CanonicalRadical& r, unsigned bits)
{
    if (!r.atom)
        return Approx::from_rational(r.coeff, bits);
    const unsigned w = bits + 8;
    return mul(eval_atom(*r.atom, w), r.coeff, w);
}

Approx eval_sum(const RadicalSum& s, unsigned bits)
{
    const unsigned w = bits;
    Approx acc = Approx::from_rational(s.rational_part(), w);
    for (const auto& [atom, c] : s.terms())
        acc = acc + mul(eval_atom(atom, w), c, w);
    return acc;
}

Approx eval_terms(std::span<const RadicalTerm> terms, unsigned bits)
{
    const unsigned w = bits;
    Approx acc = Approx::exact_integer(0);
    for (const auto& t : terms)
        acc = acc + mul(eval_radical(t.radicand, t.index, w), t.coeff, w);
    return acc;
}

Approx eval_poly(const PolyQ& p, const Approx& x, unsigned bits)
{
    const unsigned w = bits + 8;
    Approx acc = Approx::exact_integer(0);
    const auto& coeffs = p.coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = mul(acc, x, w) + Approx::from_rational(*it, w);
    return acc;
}

std::string Approx::to_string() const
{
    const auto render_fixed = [](const BigInt& scaled, std::uint64_t digits) {
        std::string body = BigInt(abs(scaled)).get_str();
        if (body.size() <= digits)
            body.insert(0, digits + 1 - body.size(), '0');
        if (digits > 0)
            body.insert(body.size() - digits, ".");
        return (scaled < 0 ? "-" : "") + body;
    };

    if (error_ulps == 0) {
        if (exponent >= 0)
            return shl(mantissa, static_cast<std::uint64_t>(exponent)).get_str() + " ± 0";
        // m * 2^-k = m * 5^k / 10^k
        const auto k = static_cast<unsigned long>(-exponent);
        BigInt five;
        mpz_ui_pow_ui(five.get_mpz_t(), 5, k);
        std::string text = render_fixed(mantissa * five, k);
        if (text.find('.') != std::string::npos) {
            while (text.back() == '0')
                text.pop_back();
            if (text.back() == '.')
                text.pop_back();
        }
        return text + " ± 0";
    }

    const BigRational err = error_bound();
    const BigRational twice = err * BigRational(2);
    std::uint64_t digits = 0;
    BigRational step(1);
    while (step > twice) {
        ++digits;
        step /= BigRational(10);
    }
    const BigRational mid = midpoint();
    BigInt ten_d;
    mpz_ui_pow_ui(ten_d.get_mpz_t(), 10, digits);
    const BigRational scaled = mid * BigRational(ten_d);
    const BigInt printed = round_div(scaled.num(), scaled.den());
    const BigRational shown = BigRational(printed, ten_d);
    const BigRational total = err + (shown - mid).abs();
    return render_fixed(printed, digits) + " ± 2^" + std::to_string(ceil_log2(total));
}

Separation separated_from_rational(const Approx& a, const BigInt& q_max)
{
    if (q_max < 1)
        throw DomainError("q_max must be positive");
    const BigRational half_gap(BigInt(1), 2 * q_max * q_max);
    if (a.error_bound() >= half_gap)
        throw PrecisionInsufficient("enclosure half-width " + a.error_bound().to_string() +
                                    " is not below 1/(2 q_max^2)");
    const BigRational simplest = simplest_between(a.lower(), a.upper());
    return simplest.den() <= q_max ? Separation::NotExcluded : Separation::Excluded;
}

} // namespace radicalc
