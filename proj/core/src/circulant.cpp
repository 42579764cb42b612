#include "nht/circulant.hpp"

#include <stdexcept>
#include <string>

namespace nht {

NhtMatrix::NhtMatrix(std::size_t n, Modulus m, CoeffVector coeffs)
    : n_(n), m_(m), coeffs_(std::move(coeffs)) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("NhtMatrix: n must be even and at least 4");
    if (coeffs_.size() != n / 2)
        throw std::invalid_argument("NhtMatrix: expected " + std::to_string(n / 2) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
    for (Residue c : coeffs_)
        if (c >= m_.value())
            throw std::invalid_argument("NhtMatrix: coefficient not reduced mod m");
}

std::vector<Residue> build_first_row(const CoeffVector& coeffs) {
    std::vector<Residue> row(2 * coeffs.size(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        row[2 * i + 1] = coeffs[i];
    return row;
}

std::vector<Residue> NhtMatrix::first_row() const {
    return build_first_row(coeffs_);
}

std::vector<Residue> NhtMatrix::row(std::size_t j) const {
    if (j >= n_)
        throw std::out_of_range("NhtMatrix::row: index out of range");
    std::vector<Residue> out(n_, 0);
    const auto r0 = first_row();
    for (std::size_t k = 0; k < n_; ++k)
        out[k] = r0[(k + n_ - j) % n_];
    return out;
}

DenseMatrix gram(const NhtMatrix& matrix, std::size_t dense_bound) {
    const std::size_t n = matrix.size();
    if (n > dense_bound)
        throw std::invalid_argument("gram: n exceeds the dense bound of " +
                                    std::to_string(dense_bound));
    std::vector<std::vector<Residue>> rows;
    rows.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        rows.push_back(matrix.row(j));
    DenseMatrix out(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
            out.at(j, l) = dot_mod(rows[j], rows[l], matrix.modulus());
    return out;
}

bool is_identity(const DenseMatrix& matrix, Modulus /*m*/) {
    const std::size_t n = matrix.size();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Residue want = r == c ? 1 : 0;
            if (matrix.at(r, c) != want)
                return false;
        }
    return true;
}

} // namespace nht
