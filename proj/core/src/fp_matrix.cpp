#include "grassbal/fp_matrix.hpp"

#include <utility>

namespace grassbal {

FpMatrix::FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

std::size_t FpMatrix::add_row() {
    data_.resize(data_.size() + cols_, 0);
    return rows_++;
}

FpMatrix FpMatrix::identity(PrimeField field, std::size_t n) {
    FpMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce_rows(FpMatrix& m) {
    const PrimeField& F = m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pick = row;
        while (pick < m.rows() && m.at(pick, col) == 0) ++pick;
        if (pick == m.rows()) continue;
        if (pick != row) {
            for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(pick, j), m.at(row, j));
        }
        const Residue scale = F.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = F.mul(m.at(row, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            const Residue factor = m.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < m.cols(); ++j) {
                m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(row, j)));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(FpMatrix m) { return reduce_rows(m).size(); }

KernelResult matrix_kernel(FpMatrix m) {
    const PrimeField F = m.field();
    const std::vector<std::size_t> pivots = reduce_rows(m);
    KernelResult out;
    out.rank = pivots.size();
    out.dimension = m.cols() - out.rank;

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Residue> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m.at(r, free));
        out.basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace grassbal
