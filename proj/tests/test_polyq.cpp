#include <gtest/gtest.h>

#include <algorithm>

#include "radicalc/errors.hpp"
#include "radicalc/numeric.hpp"
#include "radicalc/polyq.hpp"
#include "support/oracles.hpp"

using namespace radicalc;
using radicalc::testing::Rng;

namespace {

BigRational q(long n, long d = 1)
{
    return BigRational(BigInt(n), BigInt(d));
}

PolyQ poly(std::initializer_list<long> ascending)
{
    std::vector<BigRational> c;
    for (long v : ascending)
        c.emplace_back(v);
    return PolyQ(std::move(c));
}

PolyQ X()
{
    return PolyQ::monomial(1, 1);
}

bool divides(const PolyQ& d, const PolyQ& f)
{
    return divmod(f, d).second.is_zero();
}

PolyQ random_poly(Rng& rng, std::size_t max_degree)
{
    std::vector<BigRational> c;
    const auto n = rng.uniform(0, static_cast<std::int64_t>(max_degree));
    for (std::int64_t i = 0; i <= n; ++i)
        c.push_back(rng.chance(0.3) ? BigRational(0) : rng.rational(9));
    return PolyQ(std::move(c));
}

} // namespace

TEST(PolyQ, Representation)
{
    EXPECT_TRUE(poly({0, 0}).is_zero());
    EXPECT_FALSE(PolyQ().degree().has_value());
    EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1u);
    EXPECT_EQ(poly({-12, 0, 0, 0, 0, 0, 0, 0, 1}).to_string(), "X^8 - 12");
    EXPECT_EQ(PolyQ({0, 1, q(-1, 2)}).to_string(), "-1/2*X^2 + X");
    EXPECT_EQ(PolyQ().to_string(), "0");
    EXPECT_EQ(poly({3}).to_string(), "3");
    EXPECT_EQ(PolyQ({q(2, 3), -1}).to_string(), "-X + 2/3");
    EXPECT_EQ(poly({1, 1, 1}).eval(q(1, 2)), q(7, 4));
}

TEST(PolyQ, DivmodIsExact)
{
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        const PolyQ f = random_poly(rng, 8);
        PolyQ g = random_poly(rng, 5);
        if (g.is_zero())
            g = poly({1});
        const auto [quot, rem] = divmod(f, g);
        EXPECT_EQ(quot * g + rem, f);
        if (!rem.is_zero())
            EXPECT_LT(*rem.degree(), *g.degree());
    }
    EXPECT_THROW(divmod(poly({1}), PolyQ()), DomainError);
}

TEST(PolyGcd, Examples)
{
    const PolyQ a = poly({-2, 0, 1});
    const PolyQ b = poly({-4, 0, 0, 0, 1});
    EXPECT_EQ(a * poly({2, 0, 1}), b);
    EXPECT_EQ(poly_gcd(a, b), a);

    const PolyQ f = PolyQ({q(3), q(-6)});
    EXPECT_EQ(poly_gcd(f, PolyQ()), PolyQ({q(-1, 2), 1}));
    EXPECT_EQ(poly_gcd(PolyQ(), f), PolyQ({q(-1, 2), 1}));

    const PolyQ g = poly_gcd(poly({-1, 0, 1}), poly({-1, 0, 0, 1}));
    EXPECT_EQ(g, poly({-1, 1}));
    EXPECT_TRUE(divides(g, poly({-1, 0, 1})));
    EXPECT_TRUE(divides(g, poly({-1, 0, 0, 1})));

    EXPECT_THROW(poly_gcd(PolyQ(), PolyQ()), DomainError);
}

TEST(PolyGcd, DividesBothAndIsSymmetric)
{
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const PolyQ common = random_poly(rng, 3);
        const PolyQ f = random_poly(rng, 4) * common;
        const PolyQ g = random_poly(rng, 4) * common;
        if (f.is_zero() && g.is_zero())
            continue;
        const PolyQ d = poly_gcd(f, g);
        EXPECT_EQ(d.leading(), BigRational(1));
        EXPECT_TRUE(divides(d, f));
        EXPECT_TRUE(divides(d, g));
        EXPECT_EQ(poly_gcd(g, f), d);
        if (!common.is_zero() && !f.is_zero() && !g.is_zero())
            EXPECT_TRUE(divides(common, d)) << common.to_string() << " vs " << d.to_string();
    }
}

TEST(MinimalPolynomial, Examples)
{
    const std::vector<RadicalFactor> sqrt2{{2, 2, 1}};
    EXPECT_EQ(minimal_polynomial(sqrt2), poly({-2, 0, 1}));
    const std::vector<RadicalFactor> five{{5, 1, 1}};
    EXPECT_EQ(minimal_polynomial(five), poly({-5, 1}));
    const std::vector<RadicalFactor> product{{2, 4, 1}, {3, 8, 1}};
    EXPECT_EQ(minimal_polynomial(product).to_string(), "X^8 - 12");
    const std::vector<RadicalFactor> rational_power{{2, 2, 2}};
    EXPECT_EQ(minimal_polynomial(rational_power), poly({-2, 1}));
    const std::vector<RadicalFactor> none{};
    EXPECT_EQ(minimal_polynomial(none), poly({-1, 1}));
    const std::vector<RadicalFactor> bad{{0, 2, 1}};
    EXPECT_THROW(minimal_polynomial(bad), DomainError);
}

TEST(MinimalPolynomial, VanishesAndIsMinimal)
{
    Rng rng(43);
    for (int i = 0; i < 200; ++i) {
        std::vector<RadicalFactor> factors;
        const auto k = rng.uniform(1, 3);
        for (int j = 0; j < k; ++j)
            factors.push_back({rng.radicand(20), static_cast<std::uint64_t>(rng.uniform(1, 6)),
                               static_cast<std::uint64_t>(rng.uniform(0, 4))});
        const PolyQ p = minimal_polynomial(factors);
        CanonicalRadical c{1, std::nullopt};
        Approx direct = Approx::exact_integer(1);
        for (const auto& f : factors) {
            c = atom_mul(c, atom_pow(reduce_radical(f.radicand, f.index), f.power));
            direct = mul(direct, pow(eval_radical(f.radicand, f.index, 160), f.power, 160), 160);
        }
        EXPECT_EQ(p, minimal_polynomial(c));
        const std::size_t s = *p.degree();
        EXPECT_EQ(s, c.atom ? c.atom->order() : 1u);

        const Approx value = eval_poly(p, eval_canonical(c, 128), 128);
        // The enclosure of c is relative, so the residual scales with c^s.
        const BigRational scale = std::max(BigRational(1), p.coeff(0).abs());
        const BigRational limit = radicalc::testing::pow2(-(128 - static_cast<std::int64_t>(s) * 8)) * scale;
        EXPECT_LE(value.upper(), limit) << p.to_string();
        EXPECT_GE(value.lower(), -limit) << p.to_string();
        EXPECT_TRUE(radicalc::testing::agree_within(direct, eval_canonical(c, 128), radicalc::testing::pow2(-90)));

        for (std::size_t d = 1; d < s; ++d)
            if (s % d == 0)
                EXPECT_FALSE(atom_pow(c, d).is_rational()) << p.to_string() << " divisor " << d;
    }
}

TEST(MinimalPolynomial, GcdWithRadicalPolynomialIsTrivial)
{
    // For x = root(b, m) of order m and u(X) = q*(l_0 + ... + l_t X^t) - p,
    // a rational value p/q of u's sum would make u and X^m - b share the root
    // x. X^m - b is irreducible here, so the gcd is 1 for every p/q.
    Rng rng(44);
    int checked = 0;
    while (checked < 200) {
        const auto m = static_cast<std::uint64_t>(rng.uniform(2, 10));
        const BigRational b = rng.radicand(30, false);
        const CanonicalRadical x = reduce_radical(b, m);
        if (!x.atom || x.atom->order() != m)
            continue;
        const auto t = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(m) - 1));
        std::vector<BigRational> l;
        for (std::size_t j = 0; j <= t; ++j)
            l.push_back(rng.rational(50, j == t));
        // p/q: a nearby rational to the numeric value of the sum.
        Approx value = Approx::exact_integer(0);
        const Approx xv = eval_radical(b, m, 128);
        for (std::size_t j = 0; j <= t; ++j)
            value = value + mul(pow(xv, j, 128), l[j], 128);
        const BigRational guess = value.rounded(40).midpoint();
        PolyQ u(l);
        u = u - PolyQ::constant(guess);
        const PolyQ v = PolyQ::monomial(1, m) - PolyQ::constant(b);
        const PolyQ g = poly_gcd(u, v);
        EXPECT_LT(*g.degree(), m);
        EXPECT_EQ(*g.degree(), 0u);
        ++checked;
    }
}
