#include "grassbal/poly_matrix.hpp"

#include <functional>

namespace grassbal {

PolyMatrix::PolyMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, BinaryForm(field, 0)) {}

PolyMatrix PolyMatrix::with_column_degrees(PrimeField field, std::size_t rows,
                                           const std::vector<int>& col_degrees) {
    PolyMatrix m(field, rows, col_degrees.size());
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < col_degrees.size(); ++j) m.at(i, j) = BinaryForm(field, col_degrees[j]);
    }
    return m;
}

FpMatrix PolyMatrix::eval(LinePoint x) const {
    FpMatrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).eval(x);
    }
    return out;
}

PolyMatrix PolyMatrix::without_row(std::size_t row) const {
    if (row >= rows_) throw std::out_of_range("row index");
    PolyMatrix out(field_, rows_ - 1, cols_);
    for (std::size_t i = 0, r = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0; j < cols_; ++j) out.at(r, j) = at(i, j);
        ++r;
    }
    return out;
}

PolyMatrix PolyMatrix::derivative_s() const {
    PolyMatrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).derivative_s();
    }
    return out;
}

BinaryForm minor(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                 const std::vector<std::size_t>& cols) {
    if (rows.size() != cols.size() || rows.empty()) throw std::invalid_argument("minor needs a square selection");
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    // Laplace expansion along the first selected row.
    const std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
    std::optional<BinaryForm> acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (j != k) sub_cols.push_back(cols[j]);
        }
        BinaryForm term = m.at(rows[0], cols[k]) * minor(m, rest, sub_cols);
        if (k % 2 == 1) term = term.scaled(m.field().neg(1));
        if (acc) {
            *acc += term;
        } else {
            acc = std::move(term);
        }
    }
    return *acc;
}

namespace {

// Calls f on each k-subset of {0..n-1} in lexicographic order until f returns false.
bool for_each_subset(std::size_t n, std::size_t k,
                     const std::function<bool(const std::vector<std::size_t>&)>& f) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!f(idx)) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

BinaryForm minors_gcd(const PolyMatrix& m, std::size_t k) {
    if (k == 0 || k > std::min(m.rows(), m.cols())) throw std::invalid_argument("minor size out of range");
    std::optional<BinaryForm> acc;
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        return for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            BinaryForm d = minor(m, rows, cols);
            if (d.is_zero()) return true;
            acc = acc ? gcd(*acc, d) : d.monic();
            return !acc->is_unit();
        });
    });
    if (!acc) throw AllMinorsZero("all " + std::to_string(k) + "x" + std::to_string(k) + " minors vanish");
    return *acc;
}

}  // namespace grassbal
