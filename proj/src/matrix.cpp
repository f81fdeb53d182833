#include "cohomotopy/matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace coh {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<IntVec>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Matrix Matrix::column_vector(const IntVec& v) { return from_columns(v.size(), {v}); }

IntVec Matrix::column(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const IntVec& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::append_column(const IntVec& v) {
    if (cols_ == 0 && rows_ == 0) rows_ = v.size();
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    Matrix out(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        out(i, cols_) = v[i];
    }
    *this = std::move(out);
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
        }
    return p;
}

IntVec Matrix::operator*(const IntVec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + o.data_[i];
    return s;
}

Matrix Matrix::scaled(const Int& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
}

Matrix Matrix::hcat(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat row mismatch");
    Matrix out(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j) out(i, cols_ + j) = o(i, j);
    }
    return out;
}

Matrix Matrix::vcat(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vcat column mismatch");
    Matrix out(rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(rows_ + i, j) = o(i, j);
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

Matrix Matrix::direct_sum(const Matrix& o) const {
    Matrix out(rows_ + o.rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) out(rows_ + i, cols_ + j) = o(i, j);
    return out;
}

Matrix Matrix::mod(long p) const {
    Matrix out = *this;
    for (auto& x : out.data_) {
        x %= p;
        if (x < 0) x += p;
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += q * (*this)(src, j);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += q * (*this)(i, src);
}

void Matrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void Matrix::negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntVec zero_vector(std::size_t n) { return IntVec(n); }

IntVec unit_vector(std::size_t n, std::size_t i) {
    IntVec v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero_vector(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

IntVec add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVec scale(const IntVec& a, const Int& s) {
    IntVec out(a);
    for (auto& x : out) x *= s;
    return out;
}

IntVec concat(const IntVec& a, const IntVec& b) {
    IntVec out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace coh
