#include "nht/conditions.hpp"

#include <stdexcept>

namespace nht {

ConditionSet condition_set(std::size_t h) {
    if (h < 2)
        throw std::invalid_argument("condition_set: h must be at least 2");
    ConditionSet set;
    set.h = h;
    set.diagonal.reserve(h);
    for (std::size_t i = 0; i < h; ++i)
        set.diagonal.emplace_back(i, i);
    set.lags.resize(h / 2);
    for (std::size_t lag = 1; lag <= h / 2; ++lag) {
        auto& terms = set.lags[lag - 1];
        terms.reserve(h);
        for (std::size_t i = 0; i < h; ++i)
            terms.emplace_back(i, (i + lag) % h);
    }
    return set;
}

Residue autocorrelation(std::span<const Residue> u, std::size_t lag, Modulus m) {
    const std::size_t h = u.size();
    if (lag >= h)
        throw std::out_of_range("autocorrelation: lag out of range");
    Residue acc = 0;
    for (std::size_t i = 0; i < h; ++i)
        acc = add_mod(acc, mul_mod(u[i], u[(i + lag) % h], m), m);
    return acc;
}

Residue evaluate_terms(std::span<const TermPair> terms, std::span<const Residue> u,
                       Modulus m) {
    Residue acc = 0;
    for (const auto& [i, j] : terms) {
        if (i >= u.size() || j >= u.size())
            throw std::out_of_range("evaluate_terms: index out of range");
        acc = add_mod(acc, mul_mod(u[i], u[j], m), m);
    }
    return acc;
}

Verdict check_solution(std::span<const Residue> u, Modulus m) {
    if (u.size() < 2)
        throw std::invalid_argument("check_solution: need at least 2 coefficients");
    const std::size_t h = u.size();
    Verdict verdict;
    // N N^T = I needs the squares to sum to 1, not merely to a unit: the
    // inverse is the plain transpose, with no scalar correction.
    verdict.diagonal_residual = sub_mod(autocorrelation(u, 0, m), 1, m);
    verdict.lag_residuals.reserve(h / 2);
    bool pass = verdict.diagonal_residual == 0;
    for (std::size_t lag = 1; lag <= h / 2; ++lag) {
        const Residue r = autocorrelation(u, lag, m);
        verdict.lag_residuals.push_back(r);
        pass = pass && r == 0;
    }
    verdict.pass = pass;
    return verdict;
}

} // namespace nht
