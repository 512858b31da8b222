#include "goppa/gfmatrix.hpp"

#include <stdexcept>

namespace goppa {

Matrix::Matrix(const Field* field, size_t rows, size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (field == nullptr) throw std::invalid_argument("matrix requires a field");
}

Matrix Matrix::from_rows(const Field* field, const std::vector<std::vector<uint32_t>>& rows) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
        for (size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Matrix Matrix::rref() const {
    Matrix m = *this;
    const Field& f = *field_;
    size_t r = 0;
    for (size_t col = 0; col < cols_ && r < rows_; ++col) {
        size_t pivot = r;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != r) {
            for (size_t c = 0; c < cols_; ++c) {
                uint32_t tmp = m.at(r, c);
                m.set(r, c, m.at(pivot, c));
                m.set(pivot, c, tmp);
            }
        }
        uint32_t inv = f.inv_enc(m.at(r, col));
        for (size_t c = col; c < cols_; ++c) m.set(r, c, f.mul_enc(inv, m.at(r, c)));
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint32_t factor = m.at(i, col);
            if (factor == 0) continue;
            for (size_t c = col; c < cols_; ++c) {
                m.set(i, c, f.sub_enc(m.at(i, c), f.mul_enc(factor, m.at(r, c))));
            }
        }
        ++r;
    }
    return m;
}

size_t Matrix::rank() const {
    Matrix m = rref();
    size_t rank = 0;
    for (size_t r = 0; r < rows_; ++r) {
        bool nonzero = false;
        for (size_t c = 0; c < cols_; ++c) {
            if (m.at(r, c) != 0) {
                nonzero = true;
                break;
            }
        }
        if (nonzero) ++rank;
    }
    return rank;
}

Matrix Matrix::row_basis() const {
    Matrix m = rref();
    std::vector<std::vector<uint32_t>> keep;
    for (size_t r = 0; r < rows_; ++r) {
        bool nonzero = false;
        for (size_t c = 0; c < cols_; ++c) {
            if (m.at(r, c) != 0) {
                nonzero = true;
                break;
            }
        }
        if (nonzero) {
            std::vector<uint32_t> row(cols_);
            for (size_t c = 0; c < cols_; ++c) row[c] = m.at(r, c);
            keep.push_back(std::move(row));
        }
    }
    Matrix out(field_, keep.size(), cols_);
    for (size_t r = 0; r < keep.size(); ++r) {
        for (size_t c = 0; c < cols_; ++c) out.set(r, c, keep[r][c]);
    }
    return out;
}

Matrix Matrix::null_space() const {
    const Field& f = *field_;
    Matrix m = rref();
    std::vector<size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(cols_, false);
    for (size_t r = 0; r < rows_; ++r) {
        size_t c = 0;
        while (c < cols_ && m.at(r, c) == 0) ++c;
        if (c == cols_) break;
        pivot_col_of_row.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    Matrix out(field_, free_cols.size(), cols_);
    for (size_t i = 0; i < free_cols.size(); ++i) {
        size_t fc = free_cols[i];
        out.set(i, fc, 1);
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            out.set(i, pivot_col_of_row[r], f.neg_enc(m.at(r, fc)));
        }
    }
    return out;
}

Matrix Matrix::times(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    if (!field_->same_as(*o.field_)) throw std::invalid_argument("matrix field mismatch");
    const Field& f = *field_;
    Matrix out(field_, rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t k = 0; k < cols_; ++k) {
            uint32_t v = at(r, k);
            if (v == 0) continue;
            for (size_t c = 0; c < o.cols_; ++c) {
                out.set(r, c, f.add_enc(out.at(r, c), f.mul_enc(v, o.at(k, c))));
            }
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    }
    return out;
}

Matrix Matrix::conj_entries() const {
    Matrix out(field_, rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->conj_enc(data_[i]);
    return out;
}

bool Matrix::is_zero() const {
    for (uint32_t v : data_) {
        if (v != 0) return false;
    }
    return true;
}

bool Matrix::same_row_space(const Matrix& o) const {
    if (cols_ != o.cols_ || !field_->same_as(*o.field_)) return false;
    return row_basis() == o.row_basis();
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_->same_as(*o.field_) && data_ == o.data_;
}

std::optional<std::vector<uint32_t>> solve_unique(const Matrix& a, const std::vector<uint32_t>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("right-hand side length mismatch");
    const size_t unknowns = a.cols();
    Matrix aug(&a.field(), a.rows(), unknowns + 1);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < unknowns; ++c) aug.set(r, c, a.at(r, c));
        aug.set(r, unknowns, b[r]);
    }
    Matrix m = aug.rref();
    size_t rank = 0;
    for (size_t r = 0; r < m.rows(); ++r) {
        size_t c = 0;
        while (c < unknowns + 1 && m.at(r, c) == 0) ++c;
        if (c == unknowns + 1) continue;         // zero row
        if (c == unknowns) return std::nullopt;  // pivot in rhs column: inconsistent
        ++rank;
    }
    if (rank < unknowns) return std::nullopt;  // underdetermined
    std::vector<uint32_t> x(unknowns, 0);
    for (size_t r = 0; r < rank; ++r) {
        size_t c = 0;
        while (m.at(r, c) == 0) ++c;
        x[c] = m.at(r, unknowns);
    }
    return x;
}

}  // namespace goppa
