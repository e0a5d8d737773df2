// Acceptance suite: one PASS/FAIL line per criterion. Golden outputs are
// checked against the installed `radicalc` binary; property criteria run
// against the library with seeded generators.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "radicalc/exprlang.hpp"
#include "radicalc/json_io.hpp"
#include "radicalc/numeric.hpp"
#include "radicalc/polyq.hpp"
#include "radicalc/reduced_set.hpp"
#include "support/oracles.hpp"

using namespace radicalc;
using radicalc::testing::Rng;
using Json = nlohmann::json;
namespace jio = radicalc::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Invocation {
    int code = -1;
    std::string out;
};

std::string shell_quote(const std::string& s)
{
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    return q + "'";
}

Invocation radicalc_cli(const std::vector<std::string>& args)
{
    std::string cmd = shell_quote(RADICALC_CLI_PATH);
    for (const auto& a : args)
        cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    Invocation r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe))
        r.out += buf;
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    while (!r.out.empty() && r.out.back() == '\n')
        r.out.pop_back();
    return r;
}

// Collects the reasons a criterion failed; empty means pass.
class Check {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok && failures_.size() < 5)
            failures_.push_back(what);
        failed_ = failed_ || !ok;
    }
    void golden(const Invocation& r, const std::string& want, int want_code, const std::string& label)
    {
        expect(r.out == want && r.code == want_code,
               label + ": got '" + r.out + "' (exit " + std::to_string(r.code) + "), want '" + want + "' (exit " +
                   std::to_string(want_code) + ")");
    }
    bool failed() const { return failed_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    bool failed_ = false;
    std::vector<std::string> failures_;
};

struct Criterion {
    int number;
    std::string title;
    std::function<std::string(Check&)> body;  // returns a short summary
};

const std::string kMixedIndices = "rt(12,8) - 2/3*rt(108,27) + 1/2*rt(12,2)";

std::string criterion1(Check& c)
{
    const auto start = Clock::now();
    const auto r = radicalc_cli({"reduced-set", kMixedIndices});
    const double t = seconds_since(start);
    c.golden(r, "{ 2^(1/108), 3^(1/72) }", 0, "reduced-set of the mixed-index sum");
    c.expect(t < 1.0, "runtime " + std::to_string(t) + " s exceeds 1 s");
    std::ostringstream s;
    s << "printed " << r.out << " in " << t << " s";
    return s.str();
}

std::string criterion2(Check& c)
{
    c.golden(radicalc_cli({"rational", "3*rt(12,2)-5*rt(3,2)-rt(9,4)"}), "rational 0", 0, "cancellation");
    c.golden(radicalc_cli({"rational", "rt(2,2)+rt(3,2)"}), "irrational", 1, "sqrt2 + sqrt3");
    c.golden(radicalc_cli({"rational", kMixedIndices}), "irrational", 1, "mixed-index sum");
    return "3 golden verdicts";
}

std::string criterion3(Check& c)
{
    c.golden(radicalc_cli({"verify-reduced-set", "rt(2,108), rt(3,72)"}), "reduced-set (7775 tuples checked)", 0,
             "verify-reduced-set");
    const std::vector<std::pair<BigRational, std::uint64_t>> cands{{BigRational(2), 108}, {BigRational(3), 72}};
    const auto start = Clock::now();
    const ReducedSetVerdict v = verify_reduced_set(cands, kDefaultTupleBudget, 1);
    const double t = seconds_since(start);
    c.expect(v.reduced && v.tuples_checked == 108 * 72 - 1, "single-threaded verdict wrong");
    c.expect(t < 10.0, "single-threaded runtime " + std::to_string(t) + " s exceeds 10 s");
    std::ostringstream s;
    s << v.tuples_checked << " tuples, single-threaded " << t << " s";
    return s.str();
}

std::string criterion4(Check& c)
{
    struct Case {
        std::string expr, want;
    };
    for (const Case& k : {Case{"rt(2,2)", "X^2 - 2"}, Case{"rt(2,4)*rt(3,8)", "X^8 - 12"}}) {
        c.golden(radicalc_cli({"minpoly", k.expr}), k.want, 0, "minpoly " + k.expr);
        const auto r = radicalc_cli({"--json", "minpoly", k.expr});
        PolyQ p;
        try {
            p = jio::decode_poly(Json::parse(r.out));
        } catch (const std::exception& e) {
            c.expect(false, "minpoly JSON for " + k.expr + " did not decode: " + e.what());
            continue;
        }
        const RadicalSum root = lower(parse(k.expr));
        c.expect(root.terms().size() == 1 && root.rational_part().is_zero(), k.expr + " is not a single radical");
        if (root.terms().size() != 1)
            continue;
        const auto& [atom, coeff] = *root.terms().begin();
        const CanonicalRadical x{coeff, atom};
        const Approx value = eval_poly(p, eval_canonical(x, 128), 128);
        const BigRational bound = radicalc::testing::pow2(-100);
        c.expect(value.upper() < bound && value.lower() > -bound, "|p(root)| not below 2^-100 for " + k.expr);
        const std::size_t s = p.degree().value_or(0);
        for (std::size_t d = 1; d < s; ++d)
            if (s % d == 0)
                c.expect(!atom_pow(x, d).is_rational(), k.expr + ": power " + std::to_string(d) + " is rational");
    }
    return "X^2 - 2, X^8 - 12; residuals < 2^-100; proper divisor powers irrational";
}

struct PropertyCounts {
    int sums = 0, idempotent = 0, permuted = 0, numeric = 0, round_trips = 0;
    int sets_verified = 0, subsets_verified = 0, power_sums = 0;
};

std::string criterion5(Check& c)
{
    const auto start = Clock::now();
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    const BigRational tol = radicalc::testing::pow2(-96);
    PropertyCounts n;
    Rng rng(20240501);
    for (int i = 0; i < 1000; ++i) {
        auto terms = radicalc::testing::random_terms(rng, 5);
        const RadicalSum s = normalize_sum(terms);
        ++n.sums;
        const std::string label = "sum #" + std::to_string(i) + " " + s.to_string();

        // a. idempotence and permutation invariance
        const bool idem = normalize_sum(s.to_terms()) == s;
        c.expect(idem, "5a not idempotent: " + label);
        n.idempotent += idem;
        std::shuffle(terms.begin(), terms.end(), rng.engine());
        const bool perm = normalize_sum(terms) == s;
        c.expect(perm, "5a not permutation-invariant: " + label);
        n.permuted += perm;

        // b. agreement with direct evaluation of the raw terms
        const bool num = radicalc::testing::agree_within(eval_sum(s, 128), eval_terms(terms, 128), tol);
        c.expect(num, "5b numeric mismatch: " + label);
        n.numeric += num;

        // c. basis round trip
        const ReducedSet basis = construct_reduced_set(s);
        try {
            const MonomialExpression e = express_in_basis(s, basis);
            Approx back = Approx::from_rational(e.rational_part, 128);
            for (const auto& [tuple, coeff] : e.monomials)
                back = back + mul(eval_canonical(e.monomial(tuple), 128), coeff, 128);
            const bool ok = radicalc::testing::agree_within(back, eval_sum(s, 128), tol);
            c.expect(ok, "5c numeric round trip failed: " + label);
            n.round_trips += ok;
        } catch (const Error& e) {
            c.expect(false, std::string("5c express_in_basis threw ") + e.what() + ": " + label);
        }

        // d/e. brute-force verification of the set and all its subsets
        std::uint64_t product = 1;
        bool small = !basis.empty();
        for (const auto& g : basis.generators()) {
            if (product > 100'000 / g.order) {
                small = false;
                break;
            }
            product *= g.order;
        }
        if (small) {
            const auto rads = basis.radicals();
            const bool ok = verify_reduced_set(rads, kDefaultTupleBudget, threads).reduced;
            c.expect(ok, "5d constructed set failed verification: " + basis.to_string());
            n.sets_verified += ok;
            if (ok && rads.size() > 1) {
                for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << rads.size()); ++mask) {
                    std::vector<CanonicalRadical> subset;
                    for (std::size_t j = 0; j < rads.size(); ++j)
                        if (mask >> j & 1)
                            subset.push_back(rads[j]);
                    const bool sub = verify_reduced_set(subset, kDefaultTupleBudget, threads).reduced;
                    c.expect(sub, "5e subset failed verification of " + basis.to_string());
                    n.subsets_verified += sub;
                }
            }
        }
    }

    // f. polynomials of degree below m in a radical of order m
    const BigInt q_max(10'000);
    while (n.power_sums < 200) {
        const auto m = static_cast<std::uint64_t>(rng.uniform(2, 12));
        const BigRational b = rng.radicand(50);
        const CanonicalRadical x = reduce_radical(b, m);
        if (!x.atom || x.atom->order() != m)
            continue;
        const auto t = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(m) - 1));
        std::vector<BigRational> coeffs;
        std::vector<RadicalTerm> terms;
        for (std::size_t j = 0; j <= t; ++j) {
            coeffs.push_back(rng.rational(100, j == t));
            terms.push_back({coeffs.back(), b.pow(static_cast<std::int64_t>(j)), m});
        }
        const std::string label = "root(" + b.to_string() + ", " + std::to_string(m) + ") degree " + std::to_string(t);
        c.expect(!radical_power_sum_check(b, m, coeffs).has_value(), "5f rational verdict for " + label);
        try {
            const Approx v = eval_sum(normalize_sum(terms), 256);
            c.expect(separated_from_rational(v, q_max) == Separation::Excluded,
                     "5f a rational with denominator <= 10^4 was not excluded for " + label);
        } catch (const PrecisionInsufficient&) {
            c.expect(false, "5f 256 bits insufficient for " + label);
        }
        ++n.power_sums;
    }

    const double t = seconds_since(start);
    c.expect(t < 60.0, "runtime " + std::to_string(t) + " s exceeds 60 s");
    std::ostringstream s;
    s << n.sums << " sums (a " << n.idempotent << "/" << n.permuted << ", b " << n.numeric << ", c " << n.round_trips
      << ", d " << n.sets_verified << " sets, e " << n.subsets_verified << " subsets, f " << n.power_sums
      << " instances) in " << t << " s";
    return s.str();
}

std::string criterion6(Check& c)
{
    Rng rng(6006);
    int lists = 0, reduced = 0;
    while (lists < 100) {
        std::vector<CanonicalRadical> cands;
        std::uint64_t product = 1;
        const auto k = rng.uniform(1, 4);
        for (int j = 0; j < k; ++j) {
            CanonicalRadical r;
            if (!cands.empty() && rng.chance(0.3)) {
                // Build a dependent candidate from earlier ones.
                const auto& a = cands[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cands.size()) - 1))];
                const auto& b = cands[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cands.size()) - 1))];
                r = rng.chance(0.5) ? atom_pow(a, static_cast<std::uint64_t>(rng.uniform(2, 5))) : atom_mul(a, b);
            } else {
                const auto m = static_cast<std::uint64_t>(rng.uniform(2, 12));
                r = reduce_radical(rng.radicand(13, false), m);
            }
            if (!r.atom)
                continue;
            cands.push_back(r);
            product *= r.atom->order();
        }
        if (cands.empty() || product > 10'000)
            continue;
        ++lists;
        const bool brute = verify_reduced_set(cands, kDefaultTupleBudget, 1).reduced;
        const bool analytic = radicalc::testing::reduced_by_group_order(cands);
        std::string names;
        for (const auto& r : cands)
            names += r.to_string() + " ";
        c.expect(brute == analytic, "disagreement on " + names);
        reduced += brute;
    }
    return std::to_string(lists) + " lists agree (" + std::to_string(reduced) + " reduced, " +
           std::to_string(lists - reduced) + " not)";
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "reduced set of a mixed-index sum", criterion1},
        {2, "rationality verdicts", criterion2},
        {3, "brute-force reduced-set check", criterion3},
        {4, "minimal polynomials", criterion4},
        {5, "property suite", criterion5},
        {6, "oracle equivalence", criterion6},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check check;
        std::string summary;
        try {
            summary = cr.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("uncaught exception: ") + e.what());
        }
        std::cout << (check.failed() ? "FAIL" : "PASS") << "  criterion " << cr.number << ": " << cr.title;
        if (!summary.empty())
            std::cout << " -- " << summary;
        std::cout << "\n";
        for (const auto& f : check.failures())
            std::cout << "      " << f << "\n";
        failed += check.failed();
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
    return failed ? 1 : 0;
}
