#pragma once

#include <cstddef>
#include <vector>

#include "nht/conditions.hpp"
#include "nht/residue.hpp"

namespace nht {

// gram() refuses to materialize anything larger than this by default; the
// dense product is a verification oracle, not a transform path.
inline constexpr std::size_t default_dense_bound = 64;

// Row-major square matrix of residues, used for dense verification output.
class DenseMatrix {
public:
    explicit DenseMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] Residue& at(std::size_t row, std::size_t col) {
        return cells_[row * n_ + col];
    }
    [[nodiscard]] Residue at(std::size_t row, std::size_t col) const {
        return cells_[row * n_ + col];
    }

private:
    std::size_t n_;
    std::vector<Residue> cells_;
};

// An n x n circulant over Z_m stored as its n/2 coefficients. Row 0
// alternates zeros with the coefficients (0, u0, 0, u1, ...); row j is row 0
// cyclically shifted right by j. Dense form is derived on demand only.
class NhtMatrix {
public:
    // n must be even and >= 4, coeffs must hold exactly n/2 reduced entries.
    NhtMatrix(std::size_t n, Modulus m, CoeffVector coeffs);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] Modulus modulus() const noexcept { return m_; }
    [[nodiscard]] const CoeffVector& coeffs() const noexcept { return coeffs_; }

    [[nodiscard]] std::vector<Residue> first_row() const;
    // Row j: first row shifted right by j. Throws for j >= n.
    [[nodiscard]] std::vector<Residue> row(std::size_t j) const;

private:
    std::size_t n_;
    Modulus m_;
    CoeffVector coeffs_;
};

// The alternating first row (length 2h) for a coefficient vector.
std::vector<Residue> build_first_row(const CoeffVector& coeffs);

// Dense N N^T mod m, computed by honest row-times-row products. This is the
// verification oracle for check_solution; refuses n > dense_bound.
DenseMatrix gram(const NhtMatrix& matrix, std::size_t dense_bound = default_dense_bound);

bool is_identity(const DenseMatrix& matrix, Modulus m);

} // namespace nht
