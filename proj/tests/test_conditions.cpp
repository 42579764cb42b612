#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "nht/conditions.hpp"
#include "support/dense_oracle.hpp"

using namespace nht;

namespace {

// Unordered-pair multiset, normalized for comparison.
std::vector<TermPair> normalized(std::vector<TermPair> terms) {
    for (auto& [a, b] : terms)
        if (a > b)
            std::swap(a, b);
    std::sort(terms.begin(), terms.end());
    return terms;
}

CoeffVector rotated(const CoeffVector& u, std::size_t r) {
    CoeffVector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = u[(i + r) % u.size()];
    return out;
}

} // namespace

TEST_CASE("condition_set: 10-point term multisets match the printed expansions") {
    const auto set = condition_set(5);
    REQUIRE(set.lags.size() == 2);
    // lag 1: (b+e)a + (c+e)d + bc = ab + ae + cd + de + bc
    CHECK(normalized(set.lags[0]) ==
          normalized({{0, 1}, {0, 4}, {2, 3}, {3, 4}, {1, 2}}));
    // lag 2: (a+e)c + (b+a)d + eb = ac + ce + bd + ad + be
    CHECK(normalized(set.lags[1]) ==
          normalized({{0, 2}, {2, 4}, {1, 3}, {0, 3}, {1, 4}}));
    CHECK(set.diagonal ==
          std::vector<TermPair>{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}});
}

TEST_CASE("condition_set: 12-point term multisets match, factor 2 at lag 3") {
    const auto set = condition_set(6);
    REQUIRE(set.lags.size() == 3);
    // lag 1: (a+e)f + (e+c)d + (c+a)b = af + ef + de + cd + bc + ab
    CHECK(normalized(set.lags[0]) ==
          normalized({{0, 5}, {4, 5}, {3, 4}, {2, 3}, {1, 2}, {0, 1}}));
    // lag 2: (e+c)a + ec + (b+d)f + bd = ae + ac + ce + bf + df + bd
    CHECK(normalized(set.lags[1]) ==
          normalized({{0, 4}, {0, 2}, {2, 4}, {1, 5}, {3, 5}, {1, 3}}));
    // lag 3: 2(ad + be + fc) -> each pair twice
    CHECK(normalized(set.lags[2]) ==
          normalized({{0, 3}, {0, 3}, {1, 4}, {1, 4}, {2, 5}, {2, 5}}));
}

TEST_CASE("condition_set: smallest case h=2") {
    const auto set = condition_set(2);
    CHECK(set.diagonal == std::vector<TermPair>{{0, 0}, {1, 1}});
    REQUIRE(set.lags.size() == 1);
    CHECK(normalized(set.lags[0]) == normalized({{0, 1}, {0, 1}})); // 2ab
}

TEST_CASE("condition_set: term counts, midpoint doubling, errors") {
    CHECK_THROWS_AS(condition_set(0), std::invalid_argument);
    CHECK_THROWS_AS(condition_set(1), std::invalid_argument);
    for (std::size_t h = 2; h <= 9; ++h) {
        const auto set = condition_set(h);
        CHECK(set.h == h);
        CHECK(set.diagonal.size() == h);
        CHECK(set.lags.size() == h / 2);
        for (const auto& terms : set.lags)
            CHECK(terms.size() == h);
        if (h % 2 == 0) {
            const auto mid = normalized(set.lags[h / 2 - 1]);
            for (std::size_t i = 0; i + 1 < mid.size(); i += 2)
                CHECK(mid[i] == mid[i + 1]);
        }
    }
}

TEST_CASE("autocorrelation: worked values") {
    const CoeffVector u{2, 1, 2, 5, 3};
    CHECK(autocorrelation(u, 1, Modulus{7}) == 0);
    CHECK(autocorrelation(u, 0, Modulus{7}) == 1);
    CHECK(autocorrelation(CoeffVector{1, 0, 0, 0, 0}, 2, Modulus{11}) == 0);
    CHECK_THROWS_AS(autocorrelation(u, 5, Modulus{7}), std::out_of_range);
}

TEST_CASE("autocorrelation: mirror symmetry and term-set equivalence") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t h = 2 + rng() % 7;
        const Modulus m{2 + rng() % 200};
        CoeffVector u(h);
        for (auto& x : u)
            x = rng() % m.value();
        for (std::size_t lag = 1; lag < h; ++lag)
            CHECK(autocorrelation(u, lag, m) == autocorrelation(u, h - lag, m));
        const auto set = condition_set(h);
        CHECK(evaluate_terms(set.diagonal, u, m) == autocorrelation(u, 0, m));
        for (std::size_t lag = 1; lag <= h / 2; ++lag)
            CHECK(evaluate_terms(set.lags[lag - 1], u, m) == autocorrelation(u, lag, m));
    }
}

TEST_CASE("check_solution: published keys and their residuals") {
    CHECK(check_solution(CoeffVector{28, 20, 6, 14, 15}, Modulus{41}).pass);
    CHECK(check_solution(CoeffVector{1, 1, 2, 4, 8, 5}, Modulus{11}).pass);

    const auto caption29 = check_solution(CoeffVector{14, 18, 28, 27, 7, 23}, Modulus{29});
    CHECK_FALSE(caption29.pass);
    CHECK(caption29.diagonal_residual == 0);
    CHECK(caption29.lag_residuals == std::vector<Residue>{9, 3, 5});

    const auto printed43 = check_solution(CoeffVector{2, 4, 23, 16, 32, 8}, Modulus{43});
    CHECK_FALSE(printed43.pass);
    CHECK(printed43.diagonal_residual == 0);
    CHECK(printed43.lag_residuals == std::vector<Residue>{5, 38, 0});

    // the same six values pass in this order
    CHECK(check_solution(CoeffVector{2, 4, 8, 16, 32, 23}, Modulus{43}).pass);
}

TEST_CASE("check_solution: degenerate and boundary vectors") {
    const auto zero = check_solution(CoeffVector{0, 0, 0, 0, 0}, Modulus{7});
    CHECK_FALSE(zero.pass);
    CHECK(zero.diagonal_residual == 6);

    CHECK(check_solution(CoeffVector{1, 0, 0, 0, 0}, Modulus{7}).pass); // shift
    CHECK(check_solution(CoeffVector{0, 6, 0, 0, 0}, Modulus{7}).pass); // -1 shift
    CHECK_THROWS_AS(check_solution(CoeffVector{1}, Modulus{7}), std::invalid_argument);
}

TEST_CASE("check_solution: rotation, reversal and unit-scaling invariance") {
    std::mt19937_64 rng(31);
    const std::vector<std::uint64_t> moduli{2, 3, 4, 5, 7, 8, 12, 15, 29, 41};
    for (int iter = 0; iter < 250; ++iter) {
        const Modulus m{moduli[rng() % moduli.size()]};
        const std::size_t h = 2 + rng() % 5;
        CoeffVector u(h);
        for (auto& x : u)
            x = rng() % m.value();
        if (iter % 5 == 0) { // mix in guaranteed passes
            std::fill(u.begin(), u.end(), 0);
            u[rng() % h] = 1;
        }
        const bool pass = check_solution(u, m).pass;

        for (std::size_t r = 0; r < h; ++r)
            CHECK(check_solution(rotated(u, r), m).pass == pass);

        CoeffVector rev(u.rbegin(), u.rend());
        CHECK(check_solution(rev, m).pass == pass);

        for (Residue t = 1; t < m.value(); ++t) {
            if (mul_mod(t, t, m) != 1)
                continue;
            CoeffVector scaled(h);
            for (std::size_t i = 0; i < h; ++i)
                scaled[i] = mul_mod(t, u[i], m);
            CHECK(check_solution(scaled, m).pass == pass);
        }
    }
}

TEST_CASE("check_solution: equals the dense product over full small spaces") {
    auto sweep = [](std::size_t h, std::uint64_t mv) {
        std::vector<std::uint64_t> u(h, 0);
        std::uint64_t disagreements = 0;
        do {
            const bool fast = check_solution(u, Modulus{mv}).pass;
            if (fast != test_oracle::gram_is_identity(u, mv))
                ++disagreements;
        } while (test_oracle::next_tuple(u, mv));
        CHECK(disagreements == 0);
    };
    for (const std::size_t h : {std::size_t{2}, std::size_t{3}})
        for (const std::uint64_t mv : {2, 3, 5, 7, 11, 13})
            sweep(h, mv);
    for (const std::uint64_t mv : {2, 3, 5, 7, 11, 13})
        sweep(4, mv);
    sweep(5, 7);
}
