#include "radicalc/reduced_set.hpp"

#include <algorithm>
#include <thread>

#include "radicalc/errors.hpp"

namespace radicalc {

ReducedSet::ReducedSet(std::vector<Generator> generators) : generators_(std::move(generators))
{
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (!is_prime(g.prime))
            throw DomainError("reduced-set base " + g.prime.get_str() + " is not prime");
        if (g.order < 2)
            throw DomainError("reduced-set order must be at least 2");
        if (i > 0 && !(generators_[i - 1].prime < g.prime))
            throw DomainError("reduced-set primes must be strictly ascending");
    }
}

std::vector<CanonicalRadical> ReducedSet::radicals() const
{
    std::vector<CanonicalRadical> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_)
        out.push_back({BigRational(1), RadicalAtom({{g.prime, Exponent{1, g.order}}})});
    return out;
}

std::string ReducedSet::to_string() const
{
    if (generators_.empty())
        return "{ }";
    std::string out = "{ ";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += generators_[i].prime.get_str() + "^(1/" + std::to_string(generators_[i].order) + ")";
    }
    return out + " }";
}

CanonicalRadical MonomialExpression::monomial(const ExponentTuple& tuple) const
{
    const auto& gens = basis.generators();
    if (tuple.size() != gens.size())
        throw BasisMismatch("exponent tuple length does not match the basis");
    CanonicalRadical out;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (tuple[k] >= gens[k].order)
            throw BasisMismatch("exponent tuple entry out of range");
        if (tuple[k] == 0)
            continue;
        const CanonicalRadical root{BigRational(1), RadicalAtom({{gens[k].prime, Exponent{1, gens[k].order}}})};
        out = atom_mul(out, atom_pow(root, tuple[k]));
    }
    return out;
}

ReducedSet construct_reduced_set(const RadicalSum& s)
{
    std::map<BigInt, std::uint64_t> eta;
    for (const auto& [atom, c] : s.terms())
        for (const auto& [p, e] : atom.exponents()) {
            auto& slot = eta.try_emplace(p, 1).first->second;
            slot = checked_lcm(slot, e.den);
        }
    std::vector<Generator> gens;
    gens.reserve(eta.size());
    for (auto& [p, order] : eta)
        gens.push_back({p, order});
    return ReducedSet(std::move(gens));
}

MonomialExpression express_in_basis(const RadicalSum& s, const ReducedSet& basis)
{
    MonomialExpression out{basis, s.rational_part(), {}};
    const auto& gens = basis.generators();
    for (const auto& [atom, c] : s.terms()) {
        ExponentTuple tuple(gens.size(), 0);
        for (const auto& [p, e] : atom.exponents()) {
            const auto it = std::lower_bound(gens.begin(), gens.end(), p,
                                             [](const Generator& g, const BigInt& q) { return g.prime < q; });
            if (it == gens.end() || it->prime != p)
                throw BasisMismatch("prime " + p.get_str() + " is not in the basis " + basis.to_string());
            if (it->order % e.den != 0)
                throw BasisMismatch("exponent " + e.to_string() + " of " + p.get_str() +
                                    " is not a multiple of 1/" + std::to_string(it->order));
            tuple[static_cast<std::size_t>(it - gens.begin())] = e.num * (it->order / e.den);
        }
        auto& slot = out.monomials[tuple];
        slot += c;
        if (slot.is_zero())
            out.monomials.erase(tuple);
    }
    return out;
}

namespace {

// Candidates' exponents over their common denominator D: the product for a
// tuple is rational iff every per-prime exponent sum is divisible by D.
struct ExponentLattice {
    std::vector<std::uint64_t> orders;
    std::vector<std::vector<std::uint64_t>> rows; // rows[i][prime index], in [0, D)
    std::uint64_t modulus = 1;

    ExponentTuple decode(std::uint64_t index) const
    {
        ExponentTuple tuple(orders.size(), 0);
        for (std::size_t i = orders.size(); i-- > 0;) {
            tuple[i] = index % orders[i];
            index /= orders[i];
        }
        return tuple;
    }

    // First index in [lo, hi) whose tuple gives a rational product.
    std::optional<std::uint64_t> scan(std::uint64_t lo, std::uint64_t hi) const
    {
        if (lo >= hi)
            return std::nullopt;
        const std::size_t nprimes = rows.empty() ? 0 : rows.front().size();
        ExponentTuple tuple = decode(lo);
        std::vector<std::uint64_t> sums(nprimes, 0);
        for (std::size_t i = 0; i < tuple.size(); ++i)
            for (std::size_t p = 0; p < nprimes; ++p)
                sums[p] = static_cast<std::uint64_t>(
                    (sums[p] + static_cast<unsigned __int128>(tuple[i]) * rows[i][p]) % modulus);

        for (std::uint64_t index = lo; index < hi; ++index) {
            if (std::all_of(sums.begin(), sums.end(), [](std::uint64_t v) { return v == 0; }))
                return index;
            // Odometer step. A coordinate wrapping from m_i - 1 to 0 has added
            // m_i * rows[i] in total, which is 0 mod D, so no correction.
            for (std::size_t i = tuple.size(); i-- > 0;) {
                for (std::size_t p = 0; p < nprimes; ++p) {
                    sums[p] += rows[i][p];
                    if (sums[p] >= modulus)
                        sums[p] -= modulus;
                }
                if (++tuple[i] < orders[i])
                    break;
                tuple[i] = 0;
            }
        }
        return std::nullopt;
    }
};

} // namespace

ReducedSetVerdict verify_reduced_set(std::span<const CanonicalRadical> candidates,
                                     std::uint64_t tuple_budget, unsigned threads)
{
    ExponentLattice lattice;
    std::map<BigInt, std::size_t> prime_index;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        if (!c.atom)
            throw DomainError("candidate " + std::to_string(i + 1) + " (" + c.to_string() +
                              ") is rational, not a reduced irrational");
        const std::uint64_t order = c.atom->order();
        lattice.orders.push_back(order);
        lattice.modulus = checked_lcm(lattice.modulus, order);
        if (__builtin_mul_overflow(total, order, &total) || total > tuple_budget)
            throw BudgetExceeded("tuple space exceeds the budget of " + std::to_string(tuple_budget));
        for (const auto& [p, e] : c.atom->exponents())
            prime_index.try_emplace(p, prime_index.size());
    }
    for (const auto& c : candidates) {
        std::vector<std::uint64_t> row(prime_index.size(), 0);
        for (const auto& [p, e] : c.atom->exponents())
            row[prime_index.at(p)] = e.num * (lattice.modulus / e.den);
        lattice.rows.push_back(std::move(row));
    }

    ReducedSetVerdict verdict;
    if (candidates.empty())
        return verdict;

    std::optional<std::uint64_t> hit;
    const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, total);
    if (workers == 1) {
        hit = lattice.scan(1, total);
    } else {
        std::vector<std::optional<std::uint64_t>> found(workers);
        std::vector<std::thread> pool;
        const std::uint64_t span = (total - 1 + workers - 1) / workers;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t lo = 1 + w * span;
            const std::uint64_t hi = std::min(total, lo + span);
            pool.emplace_back([&, w, lo, hi] { found[w] = lattice.scan(lo, hi); });
        }
        for (auto& t : pool)
            t.join();
        for (const auto& f : found)
            if (f) {
                hit = f;
                break;
            }
    }

    if (!hit) {
        verdict.tuples_checked = total - 1;
        return verdict;
    }
    verdict.reduced = false;
    verdict.tuples_checked = *hit;
    verdict.counterexample = lattice.decode(*hit);
    CanonicalRadical product;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        product = atom_mul(product, atom_pow(candidates[i], (*verdict.counterexample)[i]));
    verdict.product = std::move(product);
    return verdict;
}

ReducedSetVerdict verify_reduced_set(std::span<const std::pair<BigRational, std::uint64_t>> candidates,
                                     std::uint64_t tuple_budget, unsigned threads,
                                     std::uint64_t factor_budget)
{
    std::vector<CanonicalRadical> canon;
    canon.reserve(candidates.size());
    for (const auto& [radicand, index] : candidates)
        canon.push_back(reduce_radical(radicand, index, factor_budget));
    return verify_reduced_set(canon, tuple_budget, threads);
}

} // namespace radicalc
