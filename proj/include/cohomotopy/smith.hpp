#pragma once

#include "cohomotopy/matrix.hpp"

#include <optional>

namespace coh {

// D = U * m * V with U, V unimodular. Uinv and Vinv are tracked alongside so
// callers can move between the original and the diagonal bases.
struct SmithForm {
    Matrix D;
    Matrix U;
    Matrix V;
    Matrix Uinv;
    Matrix Vinv;
    std::vector<Int> diagonal;  // nonzero diagonal entries, d_1 | d_2 | ..., all positive
    std::size_t rank = 0;
};

// Pivot rule: smallest nonzero absolute value in the trailing block, ties broken
// by lowest (row, column) in row-major order.
SmithForm smith_normal_form(const Matrix& m);

// Basis of the integer kernel {x : m x = 0}, as columns.
Matrix integer_kernel(const Matrix& m);

// Some integer solution of m x = b, if one exists.
std::optional<IntVec> solve_integer(const Matrix& m, const IntVec& b);

// Basis (as columns) of the lattice spanned by the columns of m.
Matrix lattice_basis(const Matrix& m);

}  // namespace coh
