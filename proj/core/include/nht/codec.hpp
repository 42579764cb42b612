#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "nht/circulant.hpp"
#include "nht/conditions.hpp"
#include "nht/residue.hpp"

namespace nht {

class CodecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Coefficients that fail the orthogonality conditions.
class InvalidKeyError : public CodecError {
public:
    using CodecError::CodecError;
};

// Caller's key disagrees with the container header's (n, m, coefficients).
class KeyMismatchError : public CodecError {
public:
    using CodecError::CodecError;
};

// Structurally broken container (bad magic/version/reserved, out-of-range
// header fields, or payload bytes beyond the declared length).
class ContainerFormatError : public CodecError {
public:
    using CodecError::CodecError;
};

// Payload shorter than the header-declared length requires.
class TruncatedPayloadError : public ContainerFormatError {
public:
    using ContainerFormatError::ContainerFormatError;
};

using BlockVector = std::vector<Residue>;

// A coefficient vector admitted to the scrambling paths. Construction
// re-runs check_solution, so an invalid key can never reach a round trip.
class ScrambleKey {
public:
    ScrambleKey(std::size_t n, Modulus m, CoeffVector coeffs); // throws InvalidKeyError

    [[nodiscard]] const NhtMatrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] std::size_t block_size() const noexcept { return matrix_.size(); }
    [[nodiscard]] Modulus modulus() const noexcept { return matrix_.modulus(); }
    [[nodiscard]] const CoeffVector& coeffs() const noexcept { return matrix_.coeffs(); }

private:
    NhtMatrix matrix_;
};

// Forward product G = N F. The matrix overload works for any structurally
// valid coefficient vector, so unverified keys can still be driven through
// the transform for inspection; the scrambling paths accept only ScrambleKey.
BlockVector forward(const NhtMatrix& matrix, std::span<const Residue> block);
BlockVector forward(const ScrambleKey& key, std::span<const Residue> block);

// Inverse product F = N^T G; exact inverse of forward for a valid key.
BlockVector inverse(const ScrambleKey& key, std::span<const Residue> block);

// Input symbols are floor(log2 m) bits wide, so every symbol is a residue.
unsigned symbol_width(Modulus m);
// Payload symbols are ceil(log2 m) bits wide, enough for any residue.
unsigned payload_width(Modulus m);

// Scrambled stream plus everything needed to reverse it.
//
// Serialized layout, little-endian throughout:
//   bytes 0-3   magic "NHT1"
//   byte  4     format version, currently 1
//   byte  5     reserved, must be 0
//   bytes 6-7   n  (uint16)
//   bytes 8-15  m  (uint64)
//   next n/2*8  coefficients u0..u_{h-1} (uint64 each)
//   next 8      original payload length in bytes (uint64)
//   rest        packed symbols, payload_width(m) bits each, LSB-first
//               within each byte; zero bits pad the final byte.
struct ScrambleContainer {
    static constexpr std::array<std::uint8_t, 4> magic{'N', 'H', 'T', '1'};
    static constexpr std::uint8_t version = 1;

    std::uint16_t n = 0;
    std::uint64_t m = 0;
    CoeffVector coeffs;
    std::uint64_t original_length = 0;
    std::vector<std::uint8_t> payload;

    // Symbol and block counts implied by the header fields.
    [[nodiscard]] std::uint64_t symbol_count() const;
    [[nodiscard]] std::uint64_t block_count() const;
};

// Unpacks bytes into symbols, groups them into zero-padded blocks of n,
// transforms each block, and records the exact original byte length.
ScrambleContainer scramble_stream(const ScrambleKey& key,
                                  std::span<const std::uint8_t> bytes);

// Exact original bytes. The key must match the container header.
std::vector<std::uint8_t> descramble_stream(const ScrambleContainer& container,
                                            const ScrambleKey& key);

std::vector<std::uint8_t> serialize(const ScrambleContainer& container);
ScrambleContainer parse_container(std::span<const std::uint8_t> bytes);

} // namespace nht
