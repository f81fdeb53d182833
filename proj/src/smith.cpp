#include "cohomotopy/smith.hpp"

#include <stdexcept>

namespace coh {
namespace {

struct Reducer {
    SmithForm& s;

    // row[dst] += q * row[src] on D, mirrored on U and (inverse) on Uinv.
    void row_add(std::size_t dst, std::size_t src, const Int& q) {
        s.D.add_row_multiple(dst, src, q);
        s.U.add_row_multiple(dst, src, q);
        s.Uinv.add_col_multiple(src, dst, -q);
    }
    void col_add(std::size_t dst, std::size_t src, const Int& q) {
        s.D.add_col_multiple(dst, src, q);
        s.V.add_col_multiple(dst, src, q);
        s.Vinv.add_row_multiple(src, dst, -q);
    }
    void row_swap(std::size_t a, std::size_t b) {
        s.D.swap_rows(a, b);
        s.U.swap_rows(a, b);
        s.Uinv.swap_cols(a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        s.D.swap_cols(a, b);
        s.V.swap_cols(a, b);
        s.Vinv.swap_rows(a, b);
    }
    void row_negate(std::size_t r) {
        s.D.negate_row(r);
        s.U.negate_row(r);
        s.Uinv.negate_col(r);
    }
};

bool find_pivot(const Matrix& D, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < D.rows(); ++i)
        for (std::size_t j = t; j < D.cols(); ++j) {
            const Int& x = D(i, j);
            if (x == 0) continue;
            Int a = abs(x);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const Matrix& m) {
    SmithForm s;
    s.D = m;
    s.U = Matrix::identity(m.rows());
    s.Uinv = Matrix::identity(m.rows());
    s.V = Matrix::identity(m.cols());
    s.Vinv = Matrix::identity(m.cols());
    Reducer red{s};
    Matrix& D = s.D;

    const std::size_t limit = std::min(m.rows(), m.cols());
    std::size_t t = 0;
    while (t < limit) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(D, t, pi, pj)) break;
        red.row_swap(t, pi);
        red.col_swap(t, pj);

        for (;;) {
            for (std::size_t i = t + 1; i < D.rows(); ++i) {
                if (D(i, t) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                red.row_add(i, t, -q);
            }
            for (std::size_t j = t + 1; j < D.cols(); ++j) {
                if (D(t, j) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                red.col_add(j, t, -q);
            }

            // Remainders left in the pivot row/column are smaller than the pivot.
            bool found = false, in_col = true;
            std::size_t idx = 0;
            Int best;
            for (std::size_t i = t + 1; i < D.rows(); ++i)
                if (D(i, t) != 0 && (!found || abs(D(i, t)) < best)) {
                    found = true, in_col = true, idx = i, best = abs(D(i, t));
                }
            for (std::size_t j = t + 1; j < D.cols(); ++j)
                if (D(t, j) != 0 && (!found || abs(D(t, j)) < best)) {
                    found = true, in_col = false, idx = j, best = abs(D(t, j));
                }
            if (found) {
                if (in_col) red.row_swap(t, idx);
                else red.col_swap(t, idx);
                continue;
            }

            // Enforce divisibility of the trailing block by the pivot.
            bool fixed = false;
            for (std::size_t i = t + 1; i < D.rows() && !fixed; ++i)
                for (std::size_t j = t + 1; j < D.cols(); ++j)
                    if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
                        red.row_add(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (fixed) continue;
            break;
        }
        if (D(t, t) < 0) red.row_negate(t);
        s.diagonal.push_back(D(t, t));
        ++t;
    }
    s.rank = t;
    return s;
}

Matrix integer_kernel(const Matrix& m) {
    SmithForm s = smith_normal_form(m);
    Matrix k(m.cols(), m.cols() - s.rank);
    for (std::size_t j = s.rank; j < m.cols(); ++j) k.set_column(j - s.rank, s.V.column(j));
    return k;
}

std::optional<IntVec> solve_integer(const Matrix& m, const IntVec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve_integer: length mismatch");
    SmithForm s = smith_normal_form(m);
    IntVec w = s.U * b;
    IntVec y(m.cols());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < s.rank) {
            if (!mpz_divisible_p(w[i].get_mpz_t(), s.diagonal[i].get_mpz_t())) return std::nullopt;
            mpz_divexact(y[i].get_mpz_t(), w[i].get_mpz_t(), s.diagonal[i].get_mpz_t());
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V * y;
}

Matrix lattice_basis(const Matrix& m) {
    SmithForm s = smith_normal_form(m);
    Matrix b(m.rows(), s.rank);
    for (std::size_t i = 0; i < s.rank; ++i) b.set_column(i, scale(s.Uinv.column(i), s.diagonal[i]));
    return b;
}

}  // namespace coh
