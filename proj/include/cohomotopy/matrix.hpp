#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace coh {

using Int = mpz_class;
using IntVec = std::vector<Int>;

// Dense integer matrix, row-major. Columns are domain coordinates, rows codomain.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::size_t rows, const std::vector<IntVec>& cols);
    static Matrix column_vector(const IntVec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVec column(std::size_t j) const;
    void set_column(std::size_t j, const IntVec& v);
    void append_column(const IntVec& v);

    Matrix transpose() const;
    Matrix operator*(const Matrix& other) const;
    IntVec operator*(const IntVec& v) const;
    Matrix operator+(const Matrix& other) const;
    Matrix scaled(const Int& s) const;

    // [this | other]; both must have the same row count.
    Matrix hcat(const Matrix& other) const;
    // this stacked above other; both must have the same column count.
    Matrix vcat(const Matrix& other) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    // Block-diagonal sum.
    Matrix direct_sum(const Matrix& other) const;
    Matrix mod(long p) const;

    bool is_zero() const;
    bool operator==(const Matrix& other) const;
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
    // col[dst] += q * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntVec zero_vector(std::size_t n);
IntVec unit_vector(std::size_t n, std::size_t i);
bool is_zero_vector(const IntVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, const Int& s);
IntVec concat(const IntVec& a, const IntVec& b);

}  // namespace coh
