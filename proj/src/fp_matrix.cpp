#include "cohomotopy/fp_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace coh {
namespace {

std::size_t word_count(std::size_t cols) { return (cols + 63) / 64; }

// Row echelon data of an F2 matrix: reduced rows plus pivot column per row.
struct F2Echelon {
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::size_t> pivots;
};

F2Echelon f2_rref(const std::vector<std::uint64_t>& bits, std::size_t nrows, std::size_t ncols) {
    const std::size_t w = word_count(ncols);
    std::vector<std::vector<std::uint64_t>> r(nrows);
    for (std::size_t i = 0; i < nrows; ++i) r[i].assign(bits.begin() + i * w, bits.begin() + (i + 1) * w);
    F2Echelon e;
    std::size_t top = 0;
    for (std::size_t c = 0; c < ncols && top < nrows; ++c) {
        const std::size_t wi = c / 64;
        const std::uint64_t mask = std::uint64_t(1) << (c % 64);
        std::size_t piv = top;
        while (piv < nrows && !(r[piv][wi] & mask)) ++piv;
        if (piv == nrows) continue;
        std::swap(r[top], r[piv]);
        for (std::size_t i = 0; i < nrows; ++i)
            if (i != top && (r[i][wi] & mask))
                for (std::size_t k = 0; k < w; ++k) r[i][k] ^= r[top][k];
        e.pivots.push_back(c);
        ++top;
    }
    r.resize(top);
    e.rows = std::move(r);
    return e;
}

bool bit(const std::vector<std::uint64_t>& row, std::size_t c) { return (row[c / 64] >> (c % 64)) & 1u; }

std::uint8_t inv3(std::uint8_t x) { return x; }  // 1*1 = 2*2 = 1 mod 3

struct F3Echelon {
    std::vector<std::vector<std::uint8_t>> rows;
    std::vector<std::size_t> pivots;
};

F3Echelon f3_rref(const std::vector<std::uint8_t>& a, std::size_t nrows, std::size_t ncols) {
    std::vector<std::vector<std::uint8_t>> r(nrows);
    for (std::size_t i = 0; i < nrows; ++i) r[i].assign(a.begin() + i * ncols, a.begin() + (i + 1) * ncols);
    F3Echelon e;
    std::size_t top = 0;
    for (std::size_t c = 0; c < ncols && top < nrows; ++c) {
        std::size_t piv = top;
        while (piv < nrows && r[piv][c] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(r[top], r[piv]);
        const std::uint8_t s = inv3(r[top][c]);
        for (auto& x : r[top]) x = static_cast<std::uint8_t>((x * s) % 3);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == top || r[i][c] == 0) continue;
            const unsigned f = 3 - r[i][c];
            for (std::size_t k = 0; k < ncols; ++k) r[i][k] = static_cast<std::uint8_t>((r[i][k] + f * r[top][k]) % 3);
        }
        e.pivots.push_back(c);
        ++top;
    }
    r.resize(top);
    e.rows = std::move(r);
    return e;
}

}  // namespace

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_(word_count(cols)), bits_(rows * word_count(cols), 0) {}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

F2Matrix F2Matrix::from_int(const Matrix& m) {
    F2Matrix f(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (mpz_odd_p(m(i, j).get_mpz_t())) f.set(i, j, true);
    return f;
}

F2Matrix F2Matrix::from_columns(std::size_t rows, const std::vector<FVec>& cols) {
    F2Matrix f(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("F2 column length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            if (cols[j][i] & 1u) f.set(i, j, true);
    }
    return f;
}

void F2Matrix::set(std::size_t i, std::size_t j, bool v) {
    std::uint64_t& w = bits_[i * words_ + j / 64];
    const std::uint64_t mask = std::uint64_t(1) << (j % 64);
    w = v ? (w | mask) : (w & ~mask);
}

FVec F2Matrix::column(std::size_t j) const {
    FVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = get(i, j);
    return v;
}

FVec F2Matrix::apply(const FVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("F2 apply: length mismatch");
    FVec y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        unsigned s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s ^= (get(i, j) & (x[j] & 1u));
        y[i] = static_cast<std::uint8_t>(s);
    }
    return y;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("F2 product shape mismatch");
    F2Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(i, k))
                for (std::size_t w = 0; w < o.words_; ++w) p.bits_[i * p.words_ + w] ^= o.bits_[k * o.words_ + w];
    return p;
}

F2Matrix F2Matrix::operator+(const F2Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("F2 sum shape mismatch");
    F2Matrix s = *this;
    for (std::size_t k = 0; k < bits_.size(); ++k) s.bits_[k] ^= o.bits_[k];
    return s;
}

bool F2Matrix::operator==(const F2Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

F2Matrix F2Matrix::hcat(const F2Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("F2 hcat row mismatch");
    F2Matrix out(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) out.set(i, j, true);
        for (std::size_t j = 0; j < o.cols_; ++j)
            if (o.get(i, j)) out.set(i, cols_ + j, true);
    }
    return out;
}

F2Matrix F2Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    F2Matrix out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k)
            if (get(i, idx[k])) out.set(i, k, true);
    return out;
}

bool F2Matrix::is_zero() const {
    for (auto w : bits_)
        if (w) return false;
    return true;
}

Matrix F2Matrix::to_int() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) m(i, j) = 1;
    return m;
}

std::size_t F2Matrix::rank() const { return f2_rref(bits_, rows_, cols_).pivots.size(); }

F2Matrix F2Matrix::kernel() const {
    F2Echelon e = f2_rref(bits_, rows_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<FVec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        FVec x(cols_, 0);
        x[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (bit(e.rows[r], f)) x[e.pivots[r]] = 1;
        basis.push_back(std::move(x));
    }
    return from_columns(cols_, basis);
}

F2Matrix F2Matrix::image() const { return select_columns(f2_rref(bits_, rows_, cols_).pivots); }

std::optional<FVec> F2Matrix::solve(const FVec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("F2 solve: length mismatch");
    F2Matrix aug = hcat(from_columns(rows_, {b}));
    F2Echelon e = f2_rref(aug.bits_, rows_, cols_ + 1);
    FVec x(cols_, 0);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == cols_) return std::nullopt;
        x[e.pivots[r]] = bit(e.rows[r], cols_);
    }
    return x;
}

std::string F2Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) os << (get(i, j) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

F3Matrix::F3Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

F3Matrix F3Matrix::identity(std::size_t n) {
    F3Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

F3Matrix F3Matrix::from_int(const Matrix& m) {
    F3Matrix f(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) f.set(i, j, mpz_fdiv_ui(m(i, j).get_mpz_t(), 3));
    return f;
}

F3Matrix F3Matrix::from_columns(std::size_t rows, const std::vector<FVec>& cols) {
    F3Matrix f(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("F3 column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) f.set(i, j, cols[j][i]);
    }
    return f;
}

void F3Matrix::set(std::size_t i, std::size_t j, long v) {
    a_[i * cols_ + j] = static_cast<std::uint8_t>(((v % 3) + 3) % 3);
}

FVec F3Matrix::column(std::size_t j) const {
    FVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = get(i, j);
    return v;
}

FVec F3Matrix::apply(const FVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("F3 apply: length mismatch");
    FVec y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        unsigned s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += get(i, j) * (x[j] % 3u);
        y[i] = static_cast<std::uint8_t>(s % 3);
    }
    return y;
}

F3Matrix F3Matrix::operator*(const F3Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("F3 product shape mismatch");
    F3Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            unsigned s = 0;
            for (std::size_t k = 0; k < cols_; ++k) s += get(i, k) * o.get(k, j);
            p.set(i, j, s);
        }
    return p;
}

F3Matrix F3Matrix::hcat(const F3Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("F3 hcat row mismatch");
    F3Matrix out(rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, get(i, j));
        for (std::size_t j = 0; j < o.cols_; ++j) out.set(i, cols_ + j, o.get(i, j));
    }
    return out;
}

bool F3Matrix::is_zero() const {
    for (auto x : a_)
        if (x) return false;
    return true;
}

Matrix F3Matrix::to_int() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = get(i, j);
    return m;
}

std::size_t F3Matrix::rank() const { return f3_rref(a_, rows_, cols_).pivots.size(); }

F3Matrix F3Matrix::kernel() const {
    F3Echelon e = f3_rref(a_, rows_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<FVec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        FVec x(cols_, 0);
        x[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            x[e.pivots[r]] = static_cast<std::uint8_t>((3 - e.rows[r][f]) % 3);
        basis.push_back(std::move(x));
    }
    return from_columns(cols_, basis);
}

F3Matrix F3Matrix::image() const {
    F3Echelon e = f3_rref(a_, rows_, cols_);
    std::vector<FVec> cols;
    for (auto c : e.pivots) cols.push_back(column(c));
    return from_columns(rows_, cols);
}

std::optional<FVec> F3Matrix::solve(const FVec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("F3 solve: length mismatch");
    F3Matrix aug = hcat(from_columns(rows_, {b}));
    F3Echelon e = f3_rref(aug.a_, rows_, cols_ + 1);
    FVec x(cols_, 0);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == cols_) return std::nullopt;
        x[e.pivots[r]] = e.rows[r][cols_];
    }
    return x;
}

FVec fvec_zero(std::size_t n) { return FVec(n, 0); }

bool fvec_is_zero(const FVec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

FVec fvec_add(const FVec& a, const FVec& b, unsigned p) {
    if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
    FVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>((a[i] + b[i]) % p);
    return out;
}

FVec fvec_from_int(const IntVec& v, unsigned p) {
    FVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint8_t>(mpz_fdiv_ui(v[i].get_mpz_t(), p));
    return out;
}

IntVec fvec_to_int(const FVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

}  // namespace coh
