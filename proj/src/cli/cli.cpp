#include "radicalc/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "radicalc/exprlang.hpp"
#include "radicalc/json_io.hpp"

namespace radicalc::cli {

namespace {

using nlohmann::json;
namespace jio = radicalc::json;

struct Invocation {
    CliConfig config;
    std::string source;
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_expression(const std::string& arg, std::istream& in)
{
    if (arg != "-")
        return arg;
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.pop_back();
    return text;
}

void report(const Invocation& inv, const Error& e)
{
    if (inv.config.json) {
        json body = {{"kind", e.kind()}, {"message", e.what()}};
        if (e.span())
            body["span"] = {e.span()->begin, e.span()->end};
        if (const auto* syntax = dynamic_cast<const SyntaxError*>(&e)) {
            body["offset"] = syntax->offset();
            body["expected"] = syntax->expected();
        }
        inv.out << json{{"error", body}}.dump() << '\n';
        return;
    }
    inv.err << "error: " << e.kind() << ": " << e.what() << '\n';
    if (e.span() && e.span()->begin <= inv.source.size()) {
        const std::size_t begin = e.span()->begin;
        const std::size_t end = std::min(std::max(e.span()->end, begin + 1), inv.source.size() + 1);
        inv.err << "  " << inv.source << '\n'
                << "  " << std::string(begin, ' ') << '^' << std::string(end - begin - 1, '~') << '\n';
    }
}

RadicalSum lower_source(const Invocation& inv)
{
    return lower(parse(inv.source), LowerOptions{inv.config.factor_budget});
}

int cmd_normalize(const Invocation& inv)
{
    const RadicalSum s = lower_source(inv);
    if (inv.config.json) {
        json j = jio::encode(s);
        j["text"] = s.to_string();
        inv.out << j.dump() << '\n';
    } else {
        inv.out << s.to_string() << '\n';
    }
    return kSuccess;
}

int cmd_rational(const Invocation& inv)
{
    const auto value = is_rational(lower_source(inv));
    if (inv.config.json) {
        json j = {{"rational", value.has_value()}};
        if (value)
            j["value"] = jio::encode(*value);
        inv.out << j.dump() << '\n';
    } else if (value) {
        inv.out << "rational " << value->to_string() << '\n';
    } else {
        inv.out << "irrational\n";
    }
    return value ? kSuccess : kNegative;
}

int cmd_reduced_set(const Invocation& inv)
{
    const ReducedSet set = construct_reduced_set(lower_source(inv));
    inv.out << (inv.config.json ? jio::encode(set).dump() : set.to_string()) << '\n';
    return kSuccess;
}

CanonicalRadical single_radical(const RadicalSum& s, const Expr& node)
{
    if (s.is_rational())
        throw DomainError("candidate " + s.to_string() + " is rational, not a reduced irrational", node.span);
    if (!s.rational_part().is_zero() || s.terms().size() != 1)
        throw DomainError("candidate " + s.to_string() + " is not a single radical", node.span);
    const auto& [atom, coeff] = *s.terms().begin();
    if (coeff.sign() < 0)
        throw DomainError("candidate " + s.to_string() + " is negative, not a radical", node.span);
    return CanonicalRadical{coeff, atom};
}

int cmd_verify_reduced_set(const Invocation& inv)
{
    std::vector<CanonicalRadical> candidates;
    for (const Expr& e : parse_list(inv.source))
        candidates.push_back(single_radical(lower(e, LowerOptions{inv.config.factor_budget}), e));
    const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    const ReducedSetVerdict v = verify_reduced_set(candidates, inv.config.tuple_budget, threads);
    if (inv.config.json) {
        inv.out << jio::encode(v).dump() << '\n';
    } else if (v.reduced) {
        inv.out << "reduced-set (" << v.tuples_checked << " tuples checked)\n";
    } else {
        inv.out << "not-reduced ε=(";
        for (std::size_t i = 0; i < v.counterexample->size(); ++i)
            inv.out << (i ? "," : "") << (*v.counterexample)[i];
        inv.out << ") product=" << v.product->to_string() << '\n';
    }
    return v.reduced ? kSuccess : kNegative;
}

int cmd_minpoly(const Invocation& inv)
{
    const RadicalSum s = lower_source(inv);
    PolyQ p;
    if (s.is_rational()) {
        p = PolyQ({-s.rational_part(), BigRational(1)});
    } else {
        if (!s.rational_part().is_zero() || s.terms().size() != 1)
            throw DomainError("minpoly expects a product of radicals, got the sum " + s.to_string(),
                              Span{0, inv.source.size()});
        const auto& [atom, coeff] = *s.terms().begin();
        p = minimal_polynomial(CanonicalRadical{coeff.abs(), atom});
        // (-c)^s = (-1)^s c^s
        if (coeff.sign() < 0 && *p.degree() % 2 == 1)
            p = PolyQ::monomial(BigRational(1), *p.degree()) - PolyQ::constant(p.coeff(0));
    }
    if (inv.config.json) {
        json j = jio::encode(p);
        j["text"] = p.to_string();
        inv.out << j.dump() << '\n';
    } else {
        inv.out << p.to_string() << '\n';
    }
    return kSuccess;
}

int cmd_eval(const Invocation& inv)
{
    const Approx a = eval_sum(lower_source(inv), inv.config.precision_bits);
    if (inv.config.json) {
        json j = jio::encode(a);
        j["bits"] = inv.config.precision_bits;
        j["text"] = a.to_string();
        inv.out << j.dump() << '\n';
    } else {
        inv.out << a.to_string() << '\n';
    }
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_bits)
{
    CliConfig config;
    if (env_bits) {
        try {
            const unsigned long v = std::stoul(*env_bits);
            if (v < 16 || v > (1u << 20))
                throw std::out_of_range("bits");
            config.precision_bits = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            err << "error: RADICALC_BITS must be an integer in [16, 1048576]\n";
            return kUsageError;
        }
    }

    CLI::App app{"Exact arithmetic on real radicals", "radicalc"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", config.json, "Emit JSON instead of text");
    app.add_option("--bits", config.precision_bits, "Working precision for eval (default 128, env RADICALC_BITS)")
        ->check(CLI::Range(16u, 1u << 20));
    app.add_option("--tuple-budget", config.tuple_budget, "Maximum tuples enumerated by verify-reduced-set")
        ->check(CLI::PositiveNumber);
    app.add_option("--factor-budget", config.factor_budget, "Maximum steps per integer factorization")
        ->check(CLI::PositiveNumber);

    std::string expr;
    struct Command {
        const char* name;
        const char* help;
        int (*fn)(const Invocation&);
    };
    const Command commands[] = {
        {"normalize", "Print the canonical form of a radical expression", cmd_normalize},
        {"rational", "Decide rationality (exit 0 rational, 1 irrational)", cmd_rational},
        {"reduced-set", "Print the reduced set generating the expression's field", cmd_reduced_set},
        {"verify-reduced-set", "Brute-force check a comma-separated list of radicals", cmd_verify_reduced_set},
        {"minpoly", "Minimal polynomial of a product of radicals", cmd_minpoly},
        {"eval", "Certified numeric value", cmd_eval},
    };
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("expr", expr, "Expression text, or - to read stdin")->required();
        subs.emplace_back(sub, &c);
    }

    // CLI11 reports a misspelled command as a missing one; name it instead.
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--bits" || a == "--tuple-budget" || a == "--factor-budget") {
            ++i;
            continue;
        }
        if (a.starts_with("-"))
            continue;
        const bool known = std::any_of(std::begin(commands), std::end(commands),
                                       [&](const Command& c) { return a == c.name; });
        if (!known) {
            err << "error: unknown command '" << a << "'\nRun with --help for more information.\n";
            return kUsageError;
        }
        break;
    }

    std::vector<std::string> argv_storage{"radicalc"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    Invocation inv{config, read_expression(expr, in), in, out, err};
    for (const auto& [sub, command] : subs) {
        if (!sub->parsed())
            continue;
        try {
            return command->fn(inv);
        } catch (const BudgetExceeded& e) {
            report(inv, e);
            return kBudgetError;
        } catch (const Error& e) {
            report(inv, e);
            return kUsageError;
        }
    }
    return kUsageError;
}

} // namespace radicalc::cli
