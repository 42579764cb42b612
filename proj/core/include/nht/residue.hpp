#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace nht {

// A value already reduced into [0, m).
using Residue = std::uint64_t;

// Ring size for all arithmetic in the library. Capped below 2^63 so the
// 128-bit intermediate of a product of two reduced values never overflows.
// Composite moduli are accepted; nothing here requires primality.
class Modulus {
public:
    static constexpr std::uint64_t max_exclusive = std::uint64_t{1} << 63;

    explicit constexpr Modulus(std::uint64_t m) : m_(m) {
        if (m < 2 || m >= max_exclusive)
            throw std::invalid_argument("Modulus: value must lie in [2, 2^63)");
    }

    [[nodiscard]] constexpr std::uint64_t value() const noexcept { return m_; }

    friend constexpr bool operator==(Modulus, Modulus) noexcept = default;

private:
    std::uint64_t m_;
};

// Canonical non-negative representative of x mod m.
constexpr Residue reduce(std::int64_t x, Modulus m) noexcept {
    const auto mv = static_cast<std::int64_t>(m.value());
    std::int64_t r = x % mv;
    if (r < 0)
        r += mv;
    return static_cast<Residue>(r);
}

constexpr Residue add_mod(Residue a, Residue b, Modulus m) noexcept {
    assert(a < m.value() && b < m.value());
    const Residue s = a + b;
    return s >= m.value() ? s - m.value() : s;
}

constexpr Residue sub_mod(Residue a, Residue b, Modulus m) noexcept {
    assert(a < m.value() && b < m.value());
    return a >= b ? a - b : a + (m.value() - b);
}

// (a * b) mod m through a 128-bit intermediate; exact for any m < 2^63.
constexpr Residue mul_mod(Residue a, Residue b, Modulus m) noexcept {
    assert(a < m.value() && b < m.value());
    using u128 = unsigned __int128;
    return static_cast<Residue>(static_cast<u128>(a) * b % m.value());
}

// Sum of element-wise products, reduced mod m. All arithmetic is exact, so
// accumulation order cannot change the result.
inline Residue dot_mod(std::span<const Residue> u, std::span<const Residue> v, Modulus m) {
    if (u.size() != v.size())
        throw std::invalid_argument("dot_mod: length mismatch");
    Residue acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        acc = add_mod(acc, mul_mod(u[i], v[i], m), m);
    return acc;
}

} // namespace nht
