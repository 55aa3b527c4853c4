#pragma once

#include <cstddef>
#include <vector>

#include "grassbal/prime_field.hpp"

namespace grassbal {

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
    FpMatrix(PrimeField field, std::size_t rows, std::size_t cols);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Residue& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Residue at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    /// Adds c to entry (i, j).
    void accumulate(std::size_t i, std::size_t j, Residue c) {
        Residue& e = at(i, j);
        e = field_.add(e, c);
    }

    /// Appends a zero row and returns its index.
    std::size_t add_row();

    static FpMatrix identity(PrimeField field, std::size_t n);

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

struct KernelResult {
    std::size_t dimension = 0;
    std::size_t rank = 0;
    /// Basis vectors of length cols, one per free column.
    std::vector<std::vector<Residue>> basis;
};

/// Rank by Gaussian elimination on a copy.
std::size_t rank(FpMatrix m);

/// Exact kernel {v : M v = 0} from the reduced row echelon form.
KernelResult matrix_kernel(FpMatrix m);

}  // namespace grassbal
