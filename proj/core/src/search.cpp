#include "nht/search.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <thread>

namespace nht {
namespace {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (result > std::numeric_limits<std::uint64_t>::max() / base)
            return std::nullopt;
        result *= base;
    }
    return result;
}

void require_within_guard(std::size_t h, Modulus m, std::uint64_t guard) {
    const auto space = checked_pow(m.value(), h);
    if (!space || *space > guard)
        throw CostGuardError(
            "exhaustive search over m^h = " +
            (space ? std::to_string(*space) : std::string("more than 2^64")) +
            " candidates exceeds the cost guard of " + std::to_string(guard) +
            "; raise the guard or switch to random sampling");
}

// Ascending square roots of every residue. The innermost slot of the scan is
// filled straight from the diagonal condition instead of sweeping [0, m).
struct SqrtTable {
    std::vector<std::vector<Residue>> roots;

    explicit SqrtTable(Modulus m) : roots(m.value()) {
        for (Residue v = 0; v < m.value(); ++v)
            roots[mul_mod(v, v, m)].push_back(v);
    }
};

bool lags_vanish(const CoeffVector& u, Modulus m) {
    const std::size_t h = u.size();
    for (std::size_t lag = 1; lag <= h / 2; ++lag) {
        Residue acc = 0;
        for (std::size_t i = 0; i < h; ++i)
            acc = add_mod(acc, mul_mod(u[i], u[(i + lag) % h], m), m);
        if (acc != 0)
            return false;
    }
    return true;
}

// Depth-first sweep of positions pos..h-1 in ascending value order. The sink
// returns false to stop early (limit reached); the return value propagates.
template <typename Sink>
bool scan_suffix(CoeffVector& u, std::size_t pos, Residue diag_partial,
                 const SqrtTable& table, Modulus m, Sink&& sink) {
    if (pos + 1 == u.size()) {
        for (Residue last : table.roots[sub_mod(1, diag_partial, m)]) {
            u[pos] = last;
            if (lags_vanish(u, m) && !sink(u))
                return false;
        }
        return true;
    }
    for (Residue v = 0; v < m.value(); ++v) {
        u[pos] = v;
        if (!scan_suffix(u, pos + 1, add_mod(diag_partial, mul_mod(v, v, m), m),
                         table, m, sink))
            return false;
    }
    return true;
}

// Every passing tuple whose first coefficient lies in [lo, hi), lex order.
std::vector<CoeffVector> scan_range(std::size_t h, Modulus m, Residue lo, Residue hi,
                                    const SqrtTable& table,
                                    std::optional<std::uint64_t> limit) {
    std::vector<CoeffVector> found;
    CoeffVector u(h, 0);
    for (Residue v = lo; v < hi; ++v) {
        u[0] = v;
        const bool more =
            scan_suffix(u, 1, mul_mod(v, v, m), table, m, [&](const CoeffVector& sol) {
                found.push_back(sol);
                return !limit || found.size() < *limit;
            });
        if (!more)
            break;
    }
    return found;
}

// Partitions the first coefficient across workers and merges the per-range
// results in range order, which restores global lexicographic order.
std::vector<CoeffVector> scan_all(std::size_t h, Modulus m, unsigned workers,
                                  std::optional<std::uint64_t> limit) {
    const SqrtTable table(m);
    const std::uint64_t mv = m.value();
    const unsigned parts =
        static_cast<unsigned>(std::min<std::uint64_t>(std::max(workers, 1u), mv));
    if (parts == 1)
        return scan_range(h, m, 0, mv, table, limit);

    const std::uint64_t base = mv / parts;
    const std::uint64_t rem = mv % parts;
    std::vector<std::vector<CoeffVector>> results(parts);
    std::vector<std::thread> threads;
    threads.reserve(parts);
    for (unsigned w = 0; w < parts; ++w) {
        const Residue lo = w * base + std::min<std::uint64_t>(w, rem);
        const Residue hi = lo + base + (w < rem ? 1 : 0);
        threads.emplace_back([&results, &table, h, m, lo, hi, limit, w] {
            results[w] = scan_range(h, m, lo, hi, table, limit);
        });
    }
    for (auto& t : threads)
        t.join();

    std::vector<CoeffVector> all;
    for (auto& part : results)
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    if (limit && all.size() > *limit)
        all.resize(*limit);
    return all;
}

CoeffVector canonical_form(const CoeffVector& u, const std::vector<Residue>& units,
                           Modulus m) {
    const std::size_t h = u.size();
    CoeffVector best;
    CoeffVector candidate(h);
    for (int reversed = 0; reversed < 2; ++reversed) {
        CoeffVector base = u;
        if (reversed)
            std::reverse(base.begin(), base.end());
        for (std::size_t r = 0; r < h; ++r)
            for (Residue t : units) {
                for (std::size_t i = 0; i < h; ++i)
                    candidate[i] = mul_mod(t, base[(i + r) % h], m);
                if (best.empty() || candidate < best)
                    best = candidate;
            }
    }
    return best;
}

std::vector<SolutionRecord> make_records(std::vector<CoeffVector> tuples,
                                         std::size_t h, Modulus m) {
    const auto units = unit_square_roots(m);
    std::vector<SolutionRecord> records;
    records.reserve(tuples.size());
    for (auto& u : tuples) {
        const bool canonical = canonical_form(u, units, m) == u;
        records.push_back({2 * h, m.value(), std::move(u), canonical});
    }
    return records;
}

} // namespace

std::vector<SolutionRecord> enumerate_solutions(const SearchSpec& spec) {
    if (spec.h < 2)
        throw std::invalid_argument("enumerate_solutions: h must be at least 2");
    if (spec.mode == SearchMode::random) {
        if (spec.trial_budget == 0)
            throw std::invalid_argument(
                "enumerate_solutions: random mode requires a nonzero trial budget");
        return random_search(spec);
    }
    require_within_guard(spec.h, spec.m, spec.cost_guard);
    auto tuples = scan_all(spec.h, spec.m, spec.workers, spec.limit);
    return make_records(std::move(tuples), spec.h, spec.m);
}

std::vector<SolutionRecord> random_search(const SearchSpec& spec) {
    if (spec.h < 2)
        throw std::invalid_argument("random_search: h must be at least 2");
    std::mt19937_64 rng(spec.seed);
    const std::uint64_t mv = spec.m.value();
    std::set<CoeffVector> found;
    CoeffVector u(spec.h);
    for (std::uint64_t trial = 0; trial < spec.trial_budget; ++trial) {
        for (auto& value : u)
            value = rng() % mv;
        if (check_solution(u, spec.m).pass)
            found.insert(u);
    }
    std::vector<CoeffVector> tuples(found.begin(), found.end());
    if (spec.limit && tuples.size() > *spec.limit)
        tuples.resize(*spec.limit);
    return make_records(std::move(tuples), spec.h, spec.m);
}

CensusResult census(std::size_t h, Modulus m, std::uint64_t cost_guard,
                    unsigned workers) {
    if (h < 2)
        throw std::invalid_argument("census: h must be at least 2");
    require_within_guard(h, m, cost_guard);
    const auto tuples = scan_all(h, m, workers, std::nullopt);
    const auto units = unit_square_roots(m);
    std::set<CoeffVector> representatives;
    for (const auto& u : tuples)
        representatives.insert(canonical_form(u, units, m));
    return {tuples.size(), representatives.size()};
}

std::vector<Residue> unit_square_roots(Modulus m) {
    std::vector<Residue> units;
    for (Residue t = 1; t < m.value(); ++t)
        if (mul_mod(t, t, m) == 1)
            units.push_back(t);
    return units;
}

CoeffVector canonicalize(const CoeffVector& u, Modulus m) {
    for (Residue c : u)
        if (c >= m.value())
            throw std::invalid_argument("canonicalize: coefficient not reduced mod m");
    return canonical_form(u, unit_square_roots(m), m);
}

} // namespace nht
