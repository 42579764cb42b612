#include "nht/codec.hpp"

#include <bit>
#include <string>

namespace nht {
namespace {

using u128 = unsigned __int128;

std::string residuals_text(const Verdict& verdict) {
    std::string text = "diagonal residual " + std::to_string(verdict.diagonal_residual);
    for (std::size_t lag = 1; lag <= verdict.lag_residuals.size(); ++lag)
        text += ", lag " + std::to_string(lag) + " residual " +
                std::to_string(verdict.lag_residuals[lag - 1]);
    return text;
}

u128 symbol_count128(std::uint64_t byte_length, unsigned width) {
    return (u128(byte_length) * 8 + width - 1) / width;
}

u128 block_count128(std::uint64_t byte_length, unsigned width, std::uint16_t n) {
    return (symbol_count128(byte_length, width) + n - 1) / n;
}

u128 expected_payload_bytes(const ScrambleContainer& container) {
    const Modulus m{container.m};
    const u128 bits = block_count128(container.original_length, symbol_width(m),
                                     container.n) *
                      container.n * payload_width(m);
    return (bits + 7) / 8;
}

// LSB-first bit packing: bit k of a byte holds stream bit 8*byte + k.
class BitWriter {
public:
    void write(std::uint64_t value, unsigned width) {
        unsigned written = 0;
        while (written < width) {
            if (bit_ == 0)
                bytes_.push_back(0);
            const unsigned take = std::min(8 - bit_, width - written);
            const auto chunk = (value >> written) & ((std::uint64_t{1} << take) - 1);
            bytes_.back() |= static_cast<std::uint8_t>(chunk << bit_);
            bit_ = (bit_ + take) % 8;
            written += take;
        }
    }

    std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    unsigned bit_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    // Bits beyond the end of the buffer read as zero.
    std::uint64_t read(unsigned width) {
        std::uint64_t value = 0;
        unsigned got = 0;
        while (got < width) {
            const std::size_t byte = pos_ >> 3;
            const unsigned offset = pos_ & 7;
            const unsigned take = std::min(8 - offset, width - got);
            if (byte < bytes_.size()) {
                const std::uint64_t chunk =
                    (bytes_[byte] >> offset) & ((std::uint64_t{1} << take) - 1);
                value |= chunk << got;
            }
            pos_ += take;
            got += take;
        }
        return value;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

void append_u16(std::vector<std::uint8_t>& out, std::uint16_t value) {
    out.push_back(static_cast<std::uint8_t>(value & 0xff));
    out.push_back(static_cast<std::uint8_t>(value >> 8));
}

void append_u64(std::vector<std::uint8_t>& out, std::uint64_t value) {
    for (int i = 0; i < 8; ++i)
        out.push_back(static_cast<std::uint8_t>((value >> (8 * i)) & 0xff));
}

std::uint16_t read_u16(std::span<const std::uint8_t> bytes, std::size_t at) {
    return static_cast<std::uint16_t>(bytes[at] | (std::uint16_t(bytes[at + 1]) << 8));
}

std::uint64_t read_u64(std::span<const std::uint8_t> bytes, std::size_t at) {
    std::uint64_t value = 0;
    for (int i = 0; i < 8; ++i)
        value |= std::uint64_t(bytes[at + i]) << (8 * i);
    return value;
}

} // namespace

ScrambleKey::ScrambleKey(std::size_t n, Modulus m, CoeffVector coeffs)
    : matrix_(n, m, std::move(coeffs)) {
    const Verdict verdict = check_solution(matrix_.coeffs(), m);
    if (!verdict.pass)
        throw InvalidKeyError("ScrambleKey: coefficients fail the orthogonality "
                              "conditions (" +
                              residuals_text(verdict) + ")");
}

BlockVector forward(const NhtMatrix& matrix, std::span<const Residue> block) {
    const std::size_t n = matrix.size();
    if (block.size() != n)
        throw std::invalid_argument("forward: block length must equal n");
    const Modulus m = matrix.modulus();
    for (Residue x : block)
        if (x >= m.value())
            throw std::invalid_argument("forward: block entry not reduced mod m");
    const CoeffVector& u = matrix.coeffs();
    BlockVector g(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        // Row j carries u_i at column (j + 2i + 1) mod n.
        Residue acc = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            acc = add_mod(acc, mul_mod(u[i], block[(j + 2 * i + 1) % n], m), m);
        g[j] = acc;
    }
    return g;
}

BlockVector forward(const ScrambleKey& key, std::span<const Residue> block) {
    return forward(key.matrix(), block);
}

BlockVector inverse(const ScrambleKey& key, std::span<const Residue> block) {
    const NhtMatrix& matrix = key.matrix();
    const std::size_t n = matrix.size();
    if (block.size() != n)
        throw std::invalid_argument("inverse: block length must equal n");
    const Modulus m = matrix.modulus();
    for (Residue x : block)
        if (x >= m.value())
            throw std::invalid_argument("inverse: block entry not reduced mod m");
    const CoeffVector& u = matrix.coeffs();
    BlockVector f(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        // Column j of N carries u_i at row (j - 2i - 1) mod n.
        Residue acc = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            acc = add_mod(acc, mul_mod(u[i], block[(j + n - 2 * i - 1) % n], m), m);
        f[j] = acc;
    }
    return f;
}

unsigned symbol_width(Modulus m) {
    return std::bit_width(m.value()) - 1;
}

unsigned payload_width(Modulus m) {
    return std::bit_width(m.value() - 1);
}

std::uint64_t ScrambleContainer::symbol_count() const {
    return static_cast<std::uint64_t>(
        symbol_count128(original_length, symbol_width(Modulus{m})));
}

std::uint64_t ScrambleContainer::block_count() const {
    return static_cast<std::uint64_t>(
        block_count128(original_length, symbol_width(Modulus{m}), n));
}

ScrambleContainer scramble_stream(const ScrambleKey& key,
                                  std::span<const std::uint8_t> bytes) {
    const std::size_t n = key.block_size();
    if (n > 0xffff)
        throw std::invalid_argument("scramble_stream: n does not fit the container");
    const Modulus m = key.modulus();
    const unsigned in_width = symbol_width(m);
    const unsigned out_width = payload_width(m);

    ScrambleContainer container;
    container.n = static_cast<std::uint16_t>(n);
    container.m = m.value();
    container.coeffs = key.coeffs();
    container.original_length = bytes.size();

    const std::uint64_t symbols = container.symbol_count();
    const std::uint64_t blocks = container.block_count();

    BitReader reader(bytes);
    BitWriter writer;
    BlockVector block(n);
    std::uint64_t remaining = symbols;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        for (std::size_t i = 0; i < n; ++i) {
            if (remaining > 0) {
                block[i] = reader.read(in_width);
                --remaining;
            } else {
                block[i] = 0;
            }
        }
        for (Residue r : forward(key, block))
            writer.write(r, out_width);
    }
    container.payload = writer.take();
    return container;
}

std::vector<std::uint8_t> descramble_stream(const ScrambleContainer& container,
                                            const ScrambleKey& key) {
    if (key.block_size() != container.n || key.modulus().value() != container.m ||
        key.coeffs() != container.coeffs)
        throw KeyMismatchError("descramble: key does not match the container header");
    const u128 expected = expected_payload_bytes(container);
    if (u128(container.payload.size()) < expected)
        throw TruncatedPayloadError("descramble: payload truncated");
    if (u128(container.payload.size()) > expected)
        throw ContainerFormatError("descramble: payload has trailing bytes");

    const Modulus m = key.modulus();
    const std::size_t n = key.block_size();
    const unsigned in_width = payload_width(m);
    const unsigned out_width = symbol_width(m);

    BitReader reader(container.payload);
    BitWriter writer;
    BlockVector block(n);
    std::uint64_t remaining = container.symbol_count();
    const std::uint64_t blocks = container.block_count();
    for (std::uint64_t b = 0; b < blocks; ++b) {
        for (std::size_t i = 0; i < n; ++i) {
            block[i] = reader.read(in_width);
            if (block[i] >= m.value())
                throw ContainerFormatError("descramble: payload symbol out of range");
        }
        const BlockVector f = inverse(key, block);
        for (std::size_t i = 0; i < n && remaining > 0; ++i, --remaining) {
            if (f[i] >> out_width)
                throw ContainerFormatError(
                    "descramble: decoded symbol exceeds the symbol width");
            writer.write(f[i], out_width);
        }
    }
    auto bytes = writer.take();
    bytes.resize(container.original_length);
    return bytes;
}

std::vector<std::uint8_t> serialize(const ScrambleContainer& container) {
    std::vector<std::uint8_t> out;
    out.reserve(24 + container.coeffs.size() * 8 + container.payload.size());
    for (std::uint8_t b : ScrambleContainer::magic)
        out.push_back(b);
    out.push_back(ScrambleContainer::version);
    out.push_back(0); // reserved
    append_u16(out, container.n);
    append_u64(out, container.m);
    for (Residue c : container.coeffs)
        append_u64(out, c);
    append_u64(out, container.original_length);
    out.insert(out.end(), container.payload.begin(), container.payload.end());
    return out;
}

ScrambleContainer parse_container(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 4)
        throw TruncatedPayloadError("container: truncated inside the magic bytes");
    for (std::size_t i = 0; i < 4; ++i)
        if (bytes[i] != ScrambleContainer::magic[i])
            throw ContainerFormatError("container: bad magic");
    if (bytes.size() < 16)
        throw TruncatedPayloadError("container: truncated inside the fixed header");
    if (bytes[4] != ScrambleContainer::version)
        throw ContainerFormatError("container: unsupported format version " +
                                   std::to_string(bytes[4]));
    if (bytes[5] != 0)
        throw ContainerFormatError("container: reserved byte must be 0");

    ScrambleContainer container;
    container.n = read_u16(bytes, 6);
    container.m = read_u64(bytes, 8);
    if (container.n < 4 || container.n % 2 != 0)
        throw ContainerFormatError("container: n must be even and at least 4");
    if (container.m < 2 || container.m >= Modulus::max_exclusive)
        throw ContainerFormatError("container: modulus out of range");

    const std::size_t h = container.n / 2;
    const std::size_t header_size = 16 + 8 * h + 8;
    if (bytes.size() < header_size)
        throw TruncatedPayloadError("container: truncated inside the key fields");
    container.coeffs.reserve(h);
    for (std::size_t i = 0; i < h; ++i) {
        const std::uint64_t c = read_u64(bytes, 16 + 8 * i);
        if (c >= container.m)
            throw ContainerFormatError("container: coefficient not reduced mod m");
        container.coeffs.push_back(c);
    }
    container.original_length = read_u64(bytes, 16 + 8 * h);

    const u128 expected = expected_payload_bytes(container);
    const std::size_t available = bytes.size() - header_size;
    if (u128(available) < expected)
        throw TruncatedPayloadError("container: payload truncated");
    if (u128(available) > expected)
        throw ContainerFormatError("container: payload has trailing bytes");
    container.payload.assign(bytes.begin() + static_cast<std::ptrdiff_t>(header_size),
                             bytes.end());
    return container;
}

} // namespace nht
