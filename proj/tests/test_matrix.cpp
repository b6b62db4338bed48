#include <doctest.h>

#include "waring/matrix.hpp"

using namespace waring;

namespace {

Matrix from_rows(const FieldRef& f, std::vector<std::vector<long>> rows) {
    Matrix m(f, static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Scalar(f, rows[i][j]);
    return m;
}

// Independent determinant oracle: recursive cofactor expansion.
Scalar cofactor_det(const Matrix& m) {
    const int n = m.rows();
    if (n == 0) return Scalar::one(m.field());
    if (n == 1) return m.at(0, 0);
    Scalar acc = Scalar::zero(m.field());
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Matrix sub(m.field(), n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Scalar term = m.at(0, j) * cofactor_det(sub);
        if (j % 2 != 0) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace

TEST_CASE("rank basics") {
    FieldRef q = Field::rationals();
    Matrix id = from_rows(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(rank(id) == 3);

    Matrix zero(q, 4, 5);
    CHECK(rank(zero) == 0);

    // rank-1 outer product 4x5
    Matrix outer(q, 4, 5);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 5; ++j) outer.at(i, j) = Scalar(q, (i + 1) * (2 * j - 3));
    CHECK(rank(outer) == 1);
}

TEST_CASE("kernel basics") {
    FieldRef q = Field::rationals();
    CHECK(kernel_basis(from_rows(q, {{1, 0}, {0, 1}})).empty());

    auto k = kernel_basis(from_rows(q, {{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == Scalar(q, -1));
    CHECK(k[0][1] == Scalar(q, 1));
}

TEST_CASE("determinant basics and Bareiss vs cofactor oracle") {
    FieldRef q = Field::rationals();
    CHECK(determinant(from_rows(q, {{1, 0}, {0, 1}})) == Scalar(q, 1));
    CHECK(determinant(from_rows(q, {{2, 0}, {0, 3}})) == Scalar(q, 6));
    CHECK_THROWS_AS(determinant(Matrix(q, 2, 3)), Error);

    for (const FieldRef& field : {Field::rationals(), Field::prime(97)}) {
        Rng rng(7);
        for (int n = 1; n <= 6; ++n) {
            for (int rep = 0; rep < 20; ++rep) {
                Matrix m(field, n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) m.at(i, j) = random_scalar(field, rng, 9);
                CHECK(determinant(m) == cofactor_det(m));
            }
        }
    }
}

TEST_CASE("rank-nullity and kernel vectors annihilate") {
    FieldRef q = Field::rationals();
    Rng rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        const int rows = 1 + static_cast<int>(rng.below(6));
        const int cols = 1 + static_cast<int>(rng.below(6));
        Matrix m(q, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = Scalar(q, rng.range(-3, 3));  // small values force rank drops
        auto basis = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(basis.size()) == cols);
        for (const auto& v : basis) {
            for (const Scalar& y : mat_vec(m, v)) CHECK(y.is_zero());
        }
    }
}

TEST_CASE("solve recovers solutions and flags inconsistency") {
    FieldRef q = Field::rationals();
    Matrix a = from_rows(q, {{1, 2}, {3, 4}, {4, 6}});
    std::vector<Scalar> b{Scalar(q, 5), Scalar(q, 6), Scalar(q, 11)};  // consistent (sum of rows)
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(mat_vec(a, *x) == b);

    std::vector<Scalar> bad{Scalar(q, 5), Scalar(q, 6), Scalar(q, 12)};
    CHECK(!solve(a, bad).has_value());
}
