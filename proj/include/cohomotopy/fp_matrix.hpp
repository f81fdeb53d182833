#pragma once

#include "cohomotopy/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coh {

// Vectors over a prime field, one entry per coordinate (0..p-1).
using FVec = std::vector<std::uint8_t>;

// Linear map over F_2 stored as packed bit rows. rows = codomain dimension,
// cols = domain dimension.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);

    static F2Matrix identity(std::size_t n);
    static F2Matrix from_int(const Matrix& m);  // entries reduced mod 2
    static F2Matrix from_columns(std::size_t rows, const std::vector<FVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u; }
    void set(std::size_t i, std::size_t j, bool v);
    void flip(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] ^= std::uint64_t(1) << (j % 64); }

    FVec column(std::size_t j) const;
    FVec apply(const FVec& x) const;
    F2Matrix operator*(const F2Matrix& o) const;
    F2Matrix operator+(const F2Matrix& o) const;
    bool operator==(const F2Matrix& o) const;
    bool operator!=(const F2Matrix& o) const { return !(*this == o); }
    F2Matrix transpose() const;
    F2Matrix hcat(const F2Matrix& o) const;
    F2Matrix select_columns(const std::vector<std::size_t>& idx) const;
    bool is_zero() const;
    Matrix to_int() const;

    std::size_t rank() const;
    // Kernel basis as columns.
    F2Matrix kernel() const;
    // Basis of the column space, chosen among the original columns.
    F2Matrix image() const;
    std::optional<FVec> solve(const FVec& b) const;
    bool in_image(const FVec& b) const { return solve(b).has_value(); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Dense linear map over F_3.
class F3Matrix {
public:
    F3Matrix() = default;
    F3Matrix(std::size_t rows, std::size_t cols);

    static F3Matrix identity(std::size_t n);
    static F3Matrix from_int(const Matrix& m);
    static F3Matrix from_columns(std::size_t rows, const std::vector<FVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint8_t get(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, long v);

    FVec column(std::size_t j) const;
    FVec apply(const FVec& x) const;
    F3Matrix operator*(const F3Matrix& o) const;
    bool operator==(const F3Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    F3Matrix hcat(const F3Matrix& o) const;
    bool is_zero() const;
    Matrix to_int() const;

    std::size_t rank() const;
    F3Matrix kernel() const;
    F3Matrix image() const;
    std::optional<FVec> solve(const FVec& b) const;
    bool in_image(const FVec& b) const { return solve(b).has_value(); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> a_;
};

FVec fvec_zero(std::size_t n);
bool fvec_is_zero(const FVec& v);
FVec fvec_add(const FVec& a, const FVec& b, unsigned p = 2);
FVec fvec_from_int(const IntVec& v, unsigned p = 2);
IntVec fvec_to_int(const FVec& v);

}  // namespace coh
