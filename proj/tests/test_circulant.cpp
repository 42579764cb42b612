#include <doctest.h>

#include <random>
#include <vector>

#include "nht/circulant.hpp"
#include "support/dense_oracle.hpp"

using namespace nht;

TEST_CASE("build_first_row: zeros interleaved with coefficients") {
    CHECK(build_first_row({2, 1, 2, 5, 3}) ==
          std::vector<Residue>{0, 2, 0, 1, 0, 2, 0, 5, 0, 3});
    CHECK(build_first_row({1, 1, 2, 4, 8, 5}) ==
          std::vector<Residue>{0, 1, 0, 1, 0, 2, 0, 4, 0, 8, 0, 5});
    CHECK(build_first_row({1, 0}) == std::vector<Residue>{0, 1, 0, 0});
}

TEST_CASE("row: right shift by one per row") {
    const NhtMatrix n7(10, Modulus{7}, {2, 1, 2, 5, 3});
    CHECK(n7.row(0) == std::vector<Residue>{0, 2, 0, 1, 0, 2, 0, 5, 0, 3});
    CHECK(n7.row(1) == std::vector<Residue>{3, 0, 2, 0, 1, 0, 2, 0, 5, 0});
    CHECK(n7.row(9) == std::vector<Residue>{2, 0, 1, 0, 2, 0, 5, 0, 3, 0});
    CHECK_THROWS_AS((void)n7.row(10), std::out_of_range);
}

TEST_CASE("NhtMatrix: constructor validation") {
    CHECK_THROWS_AS(NhtMatrix(9, Modulus{7}, {1, 2, 3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(NhtMatrix(2, Modulus{7}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(NhtMatrix(10, Modulus{7}, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(NhtMatrix(10, Modulus{7}, {1, 2, 3, 4, 7}), std::invalid_argument);
    CHECK_NOTHROW(NhtMatrix(4, Modulus{2}, {1, 0}));
}

TEST_CASE("gram: identity for valid keys") {
    CHECK(is_identity(gram(NhtMatrix(10, Modulus{7}, {2, 1, 2, 5, 3})), Modulus{7}));
    CHECK(is_identity(gram(NhtMatrix(4, Modulus{5}, {1, 0})), Modulus{5}));
    CHECK(is_identity(gram(NhtMatrix(12, Modulus{103}, {78, 54, 5, 10, 20, 40})),
                      Modulus{103}));
}

TEST_CASE("gram: lag profile of the failing mod-29 key, both orderings") {
    const auto captioned = gram(NhtMatrix(12, Modulus{29}, {14, 18, 28, 27, 7, 23}));
    CHECK_FALSE(is_identity(captioned, Modulus{29}));
    const std::vector<Residue> profile{1, 0, 9, 0, 3, 0, 5, 0, 3, 0, 9, 0};
    for (std::size_t k = 0; k < 12; ++k)
        CHECK(captioned.at(0, k) == profile[k]);

    // the ordering shown in the displayed matrix fails differently: its
    // first nonzero off-diagonal sits at lag 4 with value 12
    const auto displayed = gram(NhtMatrix(12, Modulus{29}, {14, 28, 18, 27, 23, 7}));
    CHECK_FALSE(is_identity(displayed, Modulus{29}));
    CHECK(displayed.at(0, 2) == 0);
    CHECK(displayed.at(0, 4) == 12);
    CHECK(displayed.at(0, 6) == 5);
}

TEST_CASE("gram: dense bound is enforced and adjustable") {
    const CoeffVector wide(40, 1); // n = 80
    const NhtMatrix big(80, Modulus{97}, wide);
    CHECK_THROWS_AS(gram(big), std::invalid_argument);
    CHECK_NOTHROW(gram(big, 128));
}

TEST_CASE("is_identity: plain matrices") {
    DenseMatrix eye(10);
    for (std::size_t i = 0; i < 10; ++i)
        eye.at(i, i) = 1;
    CHECK(is_identity(eye, Modulus{7}));

    DenseMatrix zero(4);
    CHECK_FALSE(is_identity(zero, Modulus{7}));

    eye.at(3, 7) = 2;
    CHECK_FALSE(is_identity(eye, Modulus{7}));
}

TEST_CASE("gram: symmetric, odd lags vanish, matches the dense route") {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 150; ++iter) {
        const std::size_t h = 2 + rng() % 5;
        const Modulus m{2 + rng() % 100};
        CoeffVector u(h);
        for (auto& x : u)
            x = rng() % m.value();
        const NhtMatrix matrix(2 * h, m, u);
        const auto g = gram(matrix);
        const auto dense = test_oracle::dense_matrix(u);
        for (std::size_t r = 0; r < 2 * h; ++r)
            for (std::size_t c = 0; c < 2 * h; ++c) {
                CHECK(g.at(r, c) == g.at(c, r));
                if ((r + c) % 2 == 1) // odd lag: the zero interleave kills it
                    CHECK(g.at(r, c) == 0);
                test_oracle::u128 acc = 0;
                for (std::size_t k = 0; k < 2 * h; ++k)
                    acc += test_oracle::u128(dense[r][k]) * dense[c][k];
                CHECK(g.at(r, c) == static_cast<Residue>(acc % m.value()));
            }
    }
}

TEST_CASE("gram identity iff check_solution passes, random h in {5,6}") {
    std::mt19937_64 rng(53);
    const CoeffVector known[] = {{2, 1, 2, 5, 3}, {1, 1, 2, 4, 8, 5}};
    const std::uint64_t known_m[] = {7, 11};
    for (int iter = 0; iter < 10000; ++iter) {
        std::size_t h = 5 + iter % 2;
        Modulus m{2 + rng() % 60};
        CoeffVector u(h);
        if (iter % 50 == 0) { // mix in guaranteed passes
            u = known[iter % 2];
            m = Modulus{known_m[iter % 2]};
        } else if (iter % 50 == 25) { // and shift solutions
            std::fill(u.begin(), u.end(), 0);
            u[rng() % h] = 1;
        } else {
            for (auto& x : u)
                x = rng() % m.value();
        }
        CHECK(is_identity(gram(NhtMatrix(2 * h, m, u)), m) ==
              check_solution(u, m).pass);
    }
}
