#include "radicalc/json_io.hpp"

#include "radicalc/errors.hpp"

namespace radicalc::json {

namespace {

json encode_prime(const BigInt& p)
{
    if (p.fits_ulong_p())
        return static_cast<std::uint64_t>(p.get_ui());
    return p.get_str();
}

BigInt decode_prime(const json& j)
{
    if (j.is_number_unsigned())
        return BigInt(std::to_string(j.get<std::uint64_t>()), 10);
    if (j.is_string()) {
        const BigRational q = BigRational::parse(j.get<std::string>());
        if (q.is_integer() && q.sign() > 0)
            return q.num();
    }
    throw DomainError("expected a prime as number or string");
}

BigInt decode_bigint(const json& j)
{
    if (!j.is_string())
        throw DomainError("expected an integer string");
    const BigRational q = BigRational::parse(j.get<std::string>());
    if (!q.is_integer())
        throw DomainError("expected an integer, got " + q.to_string());
    return q.num();
}

} // namespace

json encode(const BigRational& q)
{
    return q.to_string();
}

BigRational decode_rational(const json& j)
{
    if (!j.is_string())
        throw DomainError("expected a rational string");
    return BigRational::parse(j.get<std::string>());
}

json encode(const RadicalAtom& atom)
{
    json out = json::array();
    for (const auto& [p, e] : atom.exponents())
        out.push_back({encode_prime(p), e.to_string()});
    return out;
}

RadicalAtom decode_atom(const json& j)
{
    RadicalAtom::ExponentMap exps;
    for (const auto& entry : j) {
        const BigRational e = decode_rational(entry.at(1));
        if (!e.num().fits_ulong_p() || !e.den().fits_ulong_p())
            throw DomainError("atom exponent out of range");
        exps.emplace(decode_prime(entry.at(0)), Exponent{e.num().get_ui(), e.den().get_ui()});
    }
    return RadicalAtom(std::move(exps));
}

json encode(const RadicalSum& s)
{
    json terms = json::array();
    for (const auto& [atom, c] : s.terms())
        terms.push_back({{"coeff", encode(c)}, {"atom", encode(atom)}});
    return {{"rational_part", encode(s.rational_part())}, {"terms", terms}};
}

RadicalSum decode_sum(const json& j)
{
    RadicalSum out(decode_rational(j.at("rational_part")));
    for (const auto& t : j.at("terms")) {
        const BigRational c = decode_rational(t.at("coeff"));
        if (c.is_zero())
            throw DomainError("stored term coefficients must be nonzero");
        out.add(c, CanonicalRadical{BigRational(1), decode_atom(t.at("atom"))});
    }
    return out;
}

json encode(const ReducedSet& s)
{
    json out = json::array();
    for (const auto& g : s.generators())
        out.push_back({encode_prime(g.prime), g.order});
    return out;
}

ReducedSet decode_reduced_set(const json& j)
{
    std::vector<Generator> gens;
    for (const auto& entry : j)
        gens.push_back({decode_prime(entry.at(0)), entry.at(1).get<std::uint64_t>()});
    return ReducedSet(std::move(gens));
}

json encode(const PolyQ& p)
{
    json coeffs = json::array();
    for (const auto& c : p.coeffs())
        coeffs.push_back(encode(c));
    json degree = p.degree() ? json(*p.degree()) : json(nullptr);
    return {{"degree", degree}, {"coefficients", coeffs}};
}

PolyQ decode_poly(const json& j)
{
    std::vector<BigRational> coeffs;
    for (const auto& c : j.at("coefficients"))
        coeffs.push_back(decode_rational(c));
    PolyQ p(std::move(coeffs));
    if (p.coeffs().size() != j.at("coefficients").size())
        throw DomainError("polynomial has trailing zero coefficients");
    return p;
}

json encode(const Approx& a)
{
    return {{"mantissa", a.mantissa.get_str()}, {"exponent", a.exponent}, {"error_ulps", a.error_ulps.get_str()}};
}

Approx decode_approx(const json& j)
{
    Approx a{decode_bigint(j.at("mantissa")), j.at("exponent").get<std::int64_t>(),
             decode_bigint(j.at("error_ulps"))};
    if (a.error_ulps < 0)
        throw DomainError("error_ulps must be nonnegative");
    return a;
}

json encode(const ReducedSetVerdict& v)
{
    json out = {{"verdict", v.reduced ? "reduced-set" : "not-reduced"}, {"tuples_checked", v.tuples_checked}};
    if (v.counterexample)
        out["counterexample"] = *v.counterexample;
    if (v.product) {
        if (!v.product->is_rational())
            throw DomainError("counterexample product must be rational");
        out["product"] = encode(v.product->coeff);
    }
    return out;
}

ReducedSetVerdict decode_verdict(const json& j)
{
    ReducedSetVerdict v;
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "reduced-set" && verdict != "not-reduced")
        throw DomainError("unknown verdict '" + verdict + "'");
    v.reduced = verdict == "reduced-set";
    v.tuples_checked = j.at("tuples_checked").get<std::uint64_t>();
    if (j.contains("counterexample"))
        v.counterexample = j.at("counterexample").get<ExponentTuple>();
    if (j.contains("product"))
        v.product = CanonicalRadical{decode_rational(j.at("product")), std::nullopt};
    return v;
}

} // namespace radicalc::json
