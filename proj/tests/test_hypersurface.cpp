#include <doctest.h>

#include "waring/hypersurface.hpp"
#include "waring/strata.hpp"

using namespace waring;

namespace {

BinaryForm qf(const std::string& text) { return parse_form(text, Field::rationals()); }

BinaryForm random_form(const FieldRef& field, Rng& rng, int d, long height) {
    for (;;) {
        BinaryForm f(field, VarTag::primal, d);
        for (int i = 0; i <= d; ++i) f[i] = random_scalar(field, rng, height);
        if (!f.is_zero()) return f;
    }
}

// Independent route: naive recursive cofactor expansion over MultiPoly.
MultiPoly naive_poly_det(const std::vector<std::vector<MultiPoly>>& m, std::vector<int> cols) {
    const FieldRef& field = m[0][0].field();
    const int arity = m[0][0].arity();
    const int r = static_cast<int>(m.size()) - static_cast<int>(cols.size());
    if (cols.empty()) return MultiPoly::constant(field, arity, Scalar::one(field));
    MultiPoly acc = MultiPoly::zero(field, arity);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (m[r][cols[j]].is_zero()) continue;
        std::vector<int> rest;
        for (std::size_t l = 0; l < cols.size(); ++l)
            if (l != j) rest.push_back(cols[l]);
        MultiPoly term = m[r][cols[j]] * naive_poly_det(m, rest);
        if (j % 2 != 0) term = term.negate();
        acc = acc + term;
    }
    return acc;
}

}  // namespace

TEST_CASE("multipoly arithmetic") {
    FieldRef q = Field::rationals();
    MultiPoly x = MultiPoly::variable(q, 2, 0);
    MultiPoly y = MultiPoly::variable(q, 2, 1);
    MultiPoly p = (x + y) * (x - y);
    CHECK(p.num_terms() == 2);
    CHECK(p.eval({Scalar(q, 3), Scalar(q, 2)}) == Scalar(q, 5));
    CHECK(p.total_degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK(p.derivative(0).eval({Scalar(q, 3), Scalar(q, 2)}) == Scalar(q, 6));
    CHECK((x * y).divide_by_variable(0).num_terms() == 1);
    CHECK_THROWS_AS(p.divide_by_variable(0), Error);
}

TEST_CASE("poly_determinant agrees with scalar and naive expansions") {
    FieldRef q = Field::rationals();
    Rng rng(3);
    for (int n = 1; n <= 5; ++n) {
        // constants: compare against exact scalar determinant
        std::vector<std::vector<MultiPoly>> pm(n, std::vector<MultiPoly>(n, MultiPoly::zero(q, 1)));
        Matrix sm(q, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Scalar c = random_scalar(q, rng, 9);
                sm.at(i, j) = c;
                pm[i][j] = MultiPoly::constant(q, 1, c);
            }
        MultiPoly dp = poly_determinant(pm);
        CHECK(dp.eval({Scalar::zero(q)}) == determinant(sm));
    }

    // symbolic: a 3x3 of variables against the naive cofactor route
    std::vector<std::vector<MultiPoly>> sym(3, std::vector<MultiPoly>(3, MultiPoly::zero(q, 9)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) sym[i][j] = MultiPoly::variable(q, 9, 3 * i + j);
    MultiPoly a = poly_determinant(sym);
    MultiPoly b = naive_poly_det(sym, {0, 1, 2});
    CHECK((a - b).is_zero());
    CHECK(a.num_terms() == 6);
}

TEST_CASE("context k=1 is the quadratic discriminant") {
    FieldRef q = Field::rationals();
    HypersurfaceContext ctx = context_make(1, q);
    // b1^2 - 4 b0 b2 exactly
    CHECK(ctx.disc_in_b.num_terms() == 2);
    Scalar v = ctx.disc_in_b.eval({Scalar(q, 2), Scalar(q, 3), Scalar(q, 5)});
    CHECK(v == Scalar(q, 9 - 40));
    CHECK(degree_of_equation(ctx) == 4);
}

TEST_CASE("context k=2 matches an independent cofactor expansion") {
    FieldRef q = Field::rationals();
    HypersurfaceContext ctx = context_make(2, q);
    CHECK(ctx.disc_in_b.total_degree() == 4);
    CHECK(ctx.disc_in_b.is_homogeneous());
    CHECK(ctx.disc_in_b.num_terms() == 5);  // classical cubic discriminant shape
    CHECK(degree_of_equation(ctx) == 12);

    // rebuild the Sylvester matrix and expand by the naive route
    const int m = 3, arity = 4, rows = 2 * m - 1;
    std::vector<std::vector<MultiPoly>> s(rows,
                                          std::vector<MultiPoly>(rows, MultiPoly::zero(q, arity)));
    for (int i = 0; i < m - 1; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = MultiPoly::variable(q, arity, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= m - 1; ++j)
            s[m - 1 + i][i + j] = MultiPoly::variable(q, arity, j) *
                                  MultiPoly::constant(q, arity, Scalar(q, m - j));
    std::vector<int> cols;
    for (int i = 0; i < rows; ++i) cols.push_back(i);
    MultiPoly res = naive_poly_det(s, cols);
    MultiPoly disc = res.divide_by_variable(0).negate();  // (-1)^{m(m-1)/2} = -1 for m = 3
    CHECK((disc - ctx.disc_in_b).is_zero());
}

TEST_CASE("context k=3 degree bookkeeping and the size guard") {
    FieldRef q = Field::rationals();
    HypersurfaceContext ctx = context_make(3, q);
    CHECK(ctx.disc_in_b.total_degree() == 6);
    CHECK(ctx.disc_in_b.is_homogeneous());
    CHECK(degree_of_equation(ctx) == 24);
    CHECK_THROWS_AS(context_make(7, q), Error);
    CHECK_THROWS_AS(context_make(0, q), Error);
}

TEST_CASE("minors and q_form") {
    FieldRef q = Field::rationals();

    // k=1, f = x^3: Hankel rows (1,0,0),(0,0,0): all minors vanish
    for (const Scalar& b : minors(qf("x^3"))) CHECK(b.is_zero());

    // k=1, f = x^3 + y^3: q = -uv
    BinaryForm qv = q_form(qf("x^3 + y^3"));
    CHECK(to_string(qv) == "-u*v");

    // minors are the q_form coefficients by definition
    Rng rng(7);
    BinaryForm f = random_form(q, rng, 5, 20);
    std::vector<Scalar> b = minors(f);
    BinaryForm qf5 = q_form(f);
    for (int j = 0; j <= 3; ++j) CHECK(qf5[j] == b[j]);

    // rank <= k kills every minor (k = 2)
    BinaryForm low = add(power_of_linear(random_linear(q, rng, 20), 5),
                         power_of_linear(random_linear(q, rng, 20), 5));
    for (const Scalar& bj : minors(low)) CHECK(bj.is_zero());

    CHECK_THROWS_AS(minors(qf("x^4")), Error);  // even degree
}

TEST_CASE("q_form equals the bordered determinant and is proportional to g1") {
    FieldRef q = Field::rationals();
    Rng rng(11);
    for (int k = 1; k <= 3; ++k) {
        const int d = 2 * k + 1;
        for (int rep = 0; rep < 20; ++rep) {
            BinaryForm f = random_form(q, rng, d, 20);
            BinaryForm qform = q_form(f);
            // literal determinant at a random dual point
            Scalar u0 = random_scalar(q, rng, 10), v0 = random_scalar(q, rng, 10);
            std::vector<Scalar> a = dp_coords(f);
            Matrix m(q, k + 2, k + 2);
            for (int j = 0; j <= k + 1; ++j) m.at(0, j) = u0.pow(k + 1 - j) * v0.pow(j);
            for (int r = 0; r <= k; ++r)
                for (int c = 0; c <= k + 1; ++c) m.at(r + 1, c) = a[r + c];
            CHECK(eval(qform, u0, v0) == determinant(m));
        }

        // on the generic stratum q_form spans the same line as g1
        BinaryForm f = random_form(q, rng, d, 20);
        RankCertificate cert = waring_rank(f);
        if (cert.d1 == k + 1) {
            BinaryForm qform = q_form(f);
            CHECK(mul(qform, cert.g1).degree() == 2 * (k + 1));
            // proportionality: cross-multiply coefficients
            int lead = 0;
            while (qform[lead].is_zero()) ++lead;
            for (int j = 0; j <= k + 1; ++j)
                CHECK(qform[j] * cert.g1[lead] == cert.g1[j] * qform[lead]);
        }
    }
}

TEST_CASE("defining value separates the hypersurface") {
    FieldRef q = Field::rationals();
    Rng rng(13);
    for (int k = 1; k <= 3; ++k) {
        const int d = 2 * k + 1;
        HypersurfaceContext ctx = context_make(k, q);
        for (int rep = 0; rep < 10; ++rep) {
            SupragenericPoint p = suprageneric_sample(d, k - 1, q, rng);
            CHECK(defining_value(ctx, p.f).is_zero());
            CHECK_FALSE(defining_value(ctx, random_form(q, rng, d, 30)).is_zero());
        }
        // scaling covariance pins the homogeneity degree without expansion
        BinaryForm f = random_form(q, rng, d, 20);
        Scalar c = Scalar(q, 3);
        CHECK(defining_value(ctx, scale(f, c)) ==
              c.pow(2 * k * (k + 1)) * defining_value(ctx, f));
    }
}

TEST_CASE("defining gradient vanishes on the minor locus") {
    FieldRef q = Field::rationals();
    Rng rng(17);
    for (int k = 1; k <= 3; ++k) {
        const int d = 2 * k + 1;
        HypersurfaceContext ctx = context_make(k, q);
        BinaryForm low(q, VarTag::primal, d);
        for (int j = 0; j < k; ++j)
            low = add(low, power_of_linear(random_linear(q, rng, 20), d));
        for (const Scalar& gi : defining_gradient(ctx, low)) CHECK(gi.is_zero());

        SupragenericPoint p = suprageneric_sample(d, k - 1, q, rng);
        bool nonzero = false;
        for (const Scalar& gi : defining_gradient(ctx, p.f))
            if (!gi.is_zero()) nonzero = true;
        CHECK(nonzero);
    }
}

TEST_CASE("k=1 defining value is -disc/27") {
    FieldRef q = Field::rationals();
    HypersurfaceContext ctx = context_make(1, q);
    Rng rng(19);
    const Scalar expected(q, mpq_class(-1, 27));
    for (int rep = 0; rep < 50; ++rep) {
        BinaryForm f = random_form(q, rng, 3, 50);
        Scalar disc = discriminant(f);
        if (disc.is_zero()) {
            CHECK(defining_value(ctx, f).is_zero());
            continue;
        }
        CHECK(defining_value(ctx, f) / disc == expected);
    }
}
