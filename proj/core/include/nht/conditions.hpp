#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "nht/residue.hpp"

namespace nht {

// The h = n/2 coefficients occupying the odd slots of the transform's first
// row (row 0 is 0, u0, 0, u1, ..., 0, u_{h-1}). Entries are residues mod the
// key's modulus; zeros inside the vector are allowed.
using CoeffVector = std::vector<Residue>;

// Index pair (i, j) standing for the product u_i * u_j.
using TermPair = std::pair<std::size_t, std::size_t>;

// The orthogonality conditions on a length-h coefficient vector, as explicit
// term lists. N N^T = I mod m iff the diagonal products sum to 1 and every
// lag's products sum to 0. Each lag l in 1..floor(h/2) carries exactly h
// terms (i, (i+l) mod h); when h is even the lag h/2 list names each
// unordered pair twice, which is where the factor 2 in the expanded midpoint
// condition comes from. Lags above h/2 mirror lower ones and are omitted.
struct ConditionSet {
    std::size_t h = 0;
    std::vector<TermPair> diagonal;
    std::vector<std::vector<TermPair>> lags; // lags[l-1] holds lag l
};

ConditionSet condition_set(std::size_t h);

// Cyclic autocorrelation: sum of u_i * u_{(i+lag) mod h} mod m.
// Lag 0 yields the sum of squares. Requires 0 <= lag < h.
Residue autocorrelation(std::span<const Residue> u, std::size_t lag, Modulus m);

// Sum of the products named by `terms`, reduced mod m.
Residue evaluate_terms(std::span<const TermPair> terms, std::span<const Residue> u,
                       Modulus m);

// Result of checking the conditions: pass/fail plus every residual.
struct Verdict {
    bool pass = false;
    Residue diagonal_residual = 0;      // (sum of squares - 1) mod m
    std::vector<Residue> lag_residuals; // autocorrelation at lags 1..h/2
};

Verdict check_solution(std::span<const Residue> u, Modulus m);

} // namespace nht
