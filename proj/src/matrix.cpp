#include "waring/matrix.hpp"

#include <utility>

namespace waring {

void Matrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

Echelon bareiss_echelon(Matrix m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> pivots;
    int sign = 1;
    Scalar prev = Scalar::one(m.field());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) {
            m.swap_rows(p, r);
            sign = -sign;
        }
        const Scalar pivot = m.at(r, c);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                m.at(i, j) = (m.at(i, j) * pivot - m.at(i, c) * m.at(r, j)) / prev;
            }
            m.at(i, c) = Scalar::zero(m.field());
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return Echelon{std::move(m), std::move(pivots), sign};
}

int rank(const Matrix& m) {
    return static_cast<int>(bareiss_echelon(m).pivot_cols.size());
}

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    const Echelon ech = bareiss_echelon(m);
    const Matrix& e = ech.m;
    const int cols = m.cols();
    const int nr = static_cast<int>(ech.pivot_cols.size());

    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Scalar> x(cols, Scalar::zero(m.field()));
        x[fc] = Scalar::one(m.field());
        for (int pr = nr - 1; pr >= 0; --pr) {
            const int pc = ech.pivot_cols[pr];
            if (pc > fc) continue;  // columns right of fc are all zero in x
            Scalar s = Scalar::zero(m.field());
            for (int j = pc + 1; j <= fc; ++j) {
                if (!x[j].is_zero()) s += e.at(pr, j) * x[j];
            }
            x[pc] = -s / e.at(pr, pc);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorKind::constraint, "determinant of a non-square matrix");
    if (m.rows() == 0) return Scalar::one(m.field());
    const Echelon ech = bareiss_echelon(m);
    if (static_cast<int>(ech.pivot_cols.size()) < m.rows())
        return Scalar::zero(m.field());
    // Bareiss invariant: the last pivot is the determinant up to row swaps.
    Scalar d = ech.m.at(m.rows() - 1, ech.pivot_cols.back());
    if (ech.sign < 0) d = -d;
    return d;
}

std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw Error(ErrorKind::constraint, "solve: dimension mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const Echelon ech = bareiss_echelon(std::move(aug));
    for (int c : ech.pivot_cols)
        if (c == a.cols()) return std::nullopt;  // pivot in the rhs column

    std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
    const int nr = static_cast<int>(ech.pivot_cols.size());
    for (int pr = nr - 1; pr >= 0; --pr) {
        const int pc = ech.pivot_cols[pr];
        Scalar s = ech.m.at(pr, a.cols());
        for (int j = pc + 1; j < a.cols(); ++j) {
            if (!x[j].is_zero()) s -= ech.m.at(pr, j) * x[j];
        }
        x[pc] = s / ech.m.at(pr, pc);
    }
    return x;
}

std::vector<Scalar> mat_vec(const Matrix& m, const std::vector<Scalar>& x) {
    if (static_cast<int>(x.size()) != m.cols())
        throw Error(ErrorKind::constraint, "mat_vec: dimension mismatch");
    std::vector<Scalar> y(m.rows(), Scalar::zero(m.field()));
    for (int i = 0; i < m.rows(); ++i) {
        Scalar s = Scalar::zero(m.field());
        for (int j = 0; j < m.cols(); ++j) {
            if (!x[j].is_zero() && !m.at(i, j).is_zero()) s += m.at(i, j) * x[j];
        }
        y[i] = s;
    }
    return y;
}

}  // namespace waring
