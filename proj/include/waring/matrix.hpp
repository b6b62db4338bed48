#ifndef WARING_MATRIX_HPP
#define WARING_MATRIX_HPP

#include <optional>
#include <vector>

#include "waring/field.hpp"

namespace waring {

// Dense matrix of field elements. Everything in this project is tiny
// (at most ~(2k+4) x (d+1) with d <= ~25), so dense row-major storage and
// fraction-free elimination are all we need.
class Matrix {
public:
    Matrix(FieldRef field, int rows, int cols)
        : field_(std::move(field)),
          rows_(rows),
          cols_(cols),
          e_(static_cast<std::size_t>(rows) * cols, Scalar::zero(field_)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldRef& field() const { return field_; }

    Scalar& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const {
        return e_[static_cast<std::size_t>(r) * cols_ + c];
    }

    void swap_rows(int a, int b);

private:
    FieldRef field_;
    int rows_, cols_;
    std::vector<Scalar> e_;
};

// Row echelon form produced by Bareiss fraction-free elimination with
// deterministic pivoting (first nonzero row in column order), so kernel
// bases are reproducible across runs.
struct Echelon {
    Matrix m;
    std::vector<int> pivot_cols;
    int sign;  // parity of row swaps
};

Echelon bareiss_echelon(Matrix m);

int rank(const Matrix& m);

// Canonical basis of the right kernel: one vector per pivot-free column,
// that column set to 1, other free columns 0, pivot coordinates solved.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

Scalar determinant(const Matrix& m);

// Exact solution of A x = b (free variables set to 0); nullopt when the
// system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& x);

}  // namespace waring

#endif
