#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nht/conditions.hpp"
#include "nht/residue.hpp"

namespace nht {

// Upper bound on the number of candidate checks an exhaustive run may need
// (m^h). Spaces above the guard must go through random sampling instead.
inline constexpr std::uint64_t default_cost_guard = 1'000'000'000;

class CostGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SearchMode { exhaustive, random };

struct SearchSpec {
    std::size_t h = 2;
    Modulus m;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t trial_budget = 0; // random mode: number of tuples drawn
    std::uint64_t seed = 0;         // random mode
    std::optional<std::uint64_t> limit;
    std::uint64_t cost_guard = default_cost_guard;
    unsigned workers = 1;
};

struct SolutionRecord {
    std::size_t n = 0;
    std::uint64_t m = 0;
    CoeffVector coeffs;
    bool canonical = false; // coeffs is its orbit's lexicographic minimum

    friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

// Every passing coefficient tuple in [0,m)^h, in strict lexicographic order
// regardless of worker count. Random mode emits the distinct passing tuples
// found within the trial budget, sorted. Throws CostGuardError when an
// exhaustive space exceeds the guard.
std::vector<SolutionRecord> enumerate_solutions(const SearchSpec& spec);

// Seeded random sampling; output is a pure function of (seed, trial_budget).
// An empty result is valid.
std::vector<SolutionRecord> random_search(const SearchSpec& spec);

struct CensusResult {
    std::uint64_t total_solutions = 0;
    std::uint64_t equivalence_classes = 0;

    friend bool operator==(const CensusResult&, const CensusResult&) = default;
};

// Full count of passing tuples plus the number of orbits under rotation,
// reversal and scaling by square roots of unity.
CensusResult census(std::size_t h, Modulus m,
                    std::uint64_t cost_guard = default_cost_guard,
                    unsigned workers = 1);

// All t in [1, m) with t^2 = 1 mod m, ascending. Found by scanning; for
// composite m there can be more than just 1 and m-1.
std::vector<Residue> unit_square_roots(Modulus m);

// Lexicographically smallest tuple in u's orbit under rotation, reversal and
// unit scaling. Idempotent; all three generators preserve the conditions.
CoeffVector canonicalize(const CoeffVector& u, Modulus m);

} // namespace nht
