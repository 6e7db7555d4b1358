#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dnamul {

/// Dense 0/1 matrix, row-major.
class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(std::size_t rows, std::size_t cols);

    /// Validates shape (non-empty, rectangular) and entries (0 or 1).
    static BoolMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    int at(std::size_t r, std::size_t c) const {
        return cells_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, int value);

    std::size_t count_ones() const;

    bool operator==(const BoolMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// Raw nested-list form of a matrix chain, as read from an input document.
using RawMatrices = std::vector<std::vector<std::vector<int>>>;

/// A validated multiplication chain: at least two Boolean matrices, with
/// cols(matrix i) == rows(matrix i+1) for every consecutive pair.
class MatrixChain {
public:
    /// Number of matrices in the chain (the L in layer 0..L).
    std::size_t length() const { return matrices_.size(); }

    const BoolMatrix& matrix(std::size_t i) const { return matrices_[i]; }
    const std::vector<BoolMatrix>& matrices() const { return matrices_; }

    /// Shape of the chain product: rows of the first matrix by columns of
    /// the last.
    std::size_t product_rows() const { return matrices_.front().rows(); }
    std::size_t product_cols() const { return matrices_.back().cols(); }

private:
    explicit MatrixChain(std::vector<BoolMatrix> matrices)
        : matrices_(std::move(matrices)) {}

    std::vector<BoolMatrix> matrices_;

    friend MatrixChain validate_chain(std::vector<BoolMatrix>, int);
};

/// Checks chain compatibility and the strand-length contract (even, >= 2;
/// edge strands are built from strand halves). Throws ChainTooShort,
/// EmptyMatrix, DimensionMismatch, NonBooleanEntry or OddStrandLength.
MatrixChain validate_chain(std::vector<BoolMatrix> matrices, int strand_length);
MatrixChain validate_chain(const RawMatrices& raw, int strand_length);

}  // namespace dnamul
