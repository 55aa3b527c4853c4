#pragma once

#include <stdexcept>
#include <vector>

#include "grassbal/binary_form.hpp"
#include "grassbal/fp_matrix.hpp"

namespace grassbal {

/// Matrix of binary forms. Each entry carries its own degree; the typical
/// profile is per-column degrees (a map between sums of line bundles).
class PolyMatrix {
public:
    PolyMatrix(PrimeField field, std::size_t rows, std::size_t cols);
    /// All entries zero, column j of degree col_degrees[j].
    static PolyMatrix with_column_degrees(PrimeField field, std::size_t rows,
                                          const std::vector<int>& col_degrees);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BinaryForm& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const BinaryForm& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    FpMatrix eval(LinePoint x) const;
    PolyMatrix without_row(std::size_t row) const;
    PolyMatrix derivative_s() const;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BinaryForm> entries_;
};

class AllMinorsZero : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Determinant of the square submatrix on the given rows and columns.
BinaryForm minor(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols);

/// Monic gcd of all k x k minors. Stops as soon as the running gcd is a
/// constant. Throws AllMinorsZero when every minor vanishes.
BinaryForm minors_gcd(const PolyMatrix& m, std::size_t k);

}  // namespace grassbal
