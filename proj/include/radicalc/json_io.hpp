#pragma once

#include <json.hpp>

#include "radicalc/numeric.hpp"
#include "radicalc/polyq.hpp"
#include "radicalc/reduced_set.hpp"
#include "radicalc/sumalg.hpp"

// JSON encodings used by `radicalc --json`. Rationals are strings in the
// rational text format; primes are numbers when they fit in 64 bits.
//
//   RadicalSum     {"rational_part": "1/2",
//                   "terms": [{"coeff": "-2/3", "atom": [[2, "2/27"], [3, "1/9"]]}]}
//   ReducedSet     [[2, 108], [3, 72]]
//   PolyQ          {"degree": 2, "coefficients": ["-2", "0", "1"]}   (ascending powers)
//   Approx         {"mantissa": "...", "exponent": -61, "error_ulps": "1"}
//   verdicts       {"verdict": "reduced-set", "tuples_checked": 7775}
//                  {"verdict": "not-reduced", "tuples_checked": 3,
//                   "counterexample": [1, 1], "product": "4"}
namespace radicalc::json {

using nlohmann::json;

json encode(const BigRational& q);
BigRational decode_rational(const json& j);

json encode(const RadicalAtom& atom);
RadicalAtom decode_atom(const json& j);

json encode(const RadicalSum& s);
RadicalSum decode_sum(const json& j);

json encode(const ReducedSet& s);
ReducedSet decode_reduced_set(const json& j);

json encode(const PolyQ& p);
PolyQ decode_poly(const json& j);

json encode(const Approx& a);
Approx decode_approx(const json& j);

json encode(const ReducedSetVerdict& v);
ReducedSetVerdict decode_verdict(const json& j);

} // namespace radicalc::json
