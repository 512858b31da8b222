#ifndef GOPPA_GFMATRIX_HPP
#define GOPPA_GFMATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "goppa/galois.hpp"

namespace goppa {

// Dense matrix over a Field, stored as canonical integer encodings.
// Row reduction uses deterministic pivoting (first nonzero column, smallest
// row index) so reduced forms are bit-reproducible.
class Matrix {
  public:
    Matrix(const Field* field, size_t rows, size_t cols);
    static Matrix from_rows(const Field* field, const std::vector<std::vector<uint32_t>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& field() const { return *field_; }

    uint32_t at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint32_t v) { data_[r * cols_ + c] = v; }

    Matrix rref() const;
    size_t rank() const;
    Matrix row_basis() const;     // rref with zero rows dropped
    Matrix null_space() const;    // rows span { v : M v^T = 0 }
    Matrix times(const Matrix& o) const;
    Matrix transpose() const;
    Matrix conj_entries() const;  // entrywise a -> a^q

    bool is_zero() const;
    bool same_row_space(const Matrix& o) const;
    bool operator==(const Matrix& o) const;

  private:
    const Field* field_;
    size_t rows_, cols_;
    std::vector<uint32_t> data_;
};

// Unique solution of A x = b: nullopt when the system is inconsistent or
// underdetermined (rank < number of unknowns).
std::optional<std::vector<uint32_t>> solve_unique(const Matrix& a, const std::vector<uint32_t>& b);

}  // namespace goppa

#endif
