#pragma once

// Test-only reference route, kept deliberately naive and separate from the
// library: build the dense circulant explicitly, multiply schoolbook-style,
// reduce at the end. Used to cross-check the coefficient-level fast paths.

#include <cstdint>
#include <vector>

namespace test_oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline std::vector<std::vector<u64>> dense_matrix(const std::vector<u64>& coeffs) {
    const std::size_t n = 2 * coeffs.size();
    std::vector<u64> first(n, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        first[2 * i + 1] = coeffs[i];
    std::vector<std::vector<u64>> rows(n, std::vector<u64>(n, 0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            rows[j][k] = first[(k + n - j) % n];
    return rows;
}

inline bool gram_is_identity(const std::vector<u64>& coeffs, u64 m) {
    const auto rows = dense_matrix(coeffs);
    const std::size_t n = rows.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            u128 acc = 0;
            for (std::size_t k = 0; k < n; ++k)
                acc += u128(rows[a][k]) * rows[b][k] % m;
            const u64 want = a == b ? 1 : 0;
            if (acc % m != want)
                return false;
        }
    return true;
}

inline std::vector<u64> apply(const std::vector<u64>& coeffs, u64 m,
                              const std::vector<u64>& block) {
    const auto rows = dense_matrix(coeffs);
    std::vector<u64> out(rows.size(), 0);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        u128 acc = 0;
        for (std::size_t k = 0; k < block.size(); ++k)
            acc += u128(rows[j][k]) * block[k] % m;
        out[j] = static_cast<u64>(acc % m);
    }
    return out;
}

// Advances u through [0,m)^h in lexicographic order; false after the last.
inline bool next_tuple(std::vector<u64>& u, u64 m) {
    for (std::size_t i = u.size(); i-- > 0;) {
        if (++u[i] < m)
            return true;
        u[i] = 0;
    }
    return false;
}

} // namespace test_oracle
