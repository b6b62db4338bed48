#include <doctest.h>

#include "waring/binary_form.hpp"

using namespace waring;

namespace {

BinaryForm q_form_of(const std::string& text) {
    return parse_form(text, Field::rationals());
}

std::vector<long> coeff_longs(const BinaryForm& f) {
    std::vector<long> v;
    for (int i = 0; i <= f.degree(); ++i) v.push_back(f[i].value().get_num().get_si());
    return v;
}

BinaryForm random_form(const FieldRef& field, Rng& rng, int d, long height, VarTag tag) {
    for (;;) {
        BinaryForm f(field, tag, d);
        for (int i = 0; i <= d; ++i) f[i] = random_scalar(field, rng, height);
        if (!f.is_zero()) return f;
    }
}

}  // namespace

TEST_CASE("parser accepts the grammar") {
    BinaryForm f = q_form_of("x^5*y");
    CHECK(f.degree() == 6);
    CHECK(coeff_longs(f) == std::vector<long>{0, 1, 0, 0, 0, 0, 0});

    BinaryForm g = q_form_of("3x^2 - 2*x*y + y^2");
    CHECK(g.degree() == 2);
    CHECK(coeff_longs(g) == std::vector<long>{3, -2, 1});

    CHECK(q_form_of("u^2 + v^2").tag() == VarTag::dual);
    CHECK(q_form_of("3/2*x - y") == q_form_of("3/2x - y"));
    CHECK(q_form_of("x y") == q_form_of("x*y"));  // whitespace-insignificant juxtaposition
    CHECK(q_form_of("-x^2 + x^2") .is_zero());
    CHECK(q_form_of("5").degree() == 0);
}

TEST_CASE("parser rejects bad input") {
    FieldRef q = Field::rationals();
    CHECK_THROWS_WITH_AS(parse_form("x^2 + y", q),
                         doctest::Contains("inhomogeneous"), Error);
    CHECK_THROWS_WITH_AS(parse_form("x + u", q), doctest::Contains("mix"), Error);
    CHECK_THROWS_WITH_AS(parse_form("x^2 + @", q), doctest::Contains("position"), Error);
    CHECK_THROWS_AS(parse_form("", q), Error);
    CHECK_THROWS_AS(parse_form("x*", q), Error);
    CHECK_THROWS_AS(parse_form("1/0", q), Error);
}

TEST_CASE("printing round-trips through the parser") {
    for (const FieldRef& field : {Field::rationals(), Field::prime(101)}) {
        Rng rng(3);
        for (int rep = 0; rep < 100; ++rep) {
            const int d = 1 + static_cast<int>(rng.below(8));
            VarTag tag = rng.below(2) == 0 ? VarTag::primal : VarTag::dual;
            BinaryForm f = random_form(field, rng, d, 30, tag);
            CHECK(parse_form(to_string(f), field) == f);
        }
        // constants print without variables, so they re-parse as primal
        BinaryForm c = random_form(field, rng, 0, 30, VarTag::primal);
        CHECK(parse_form(to_string(c), field) == c);
    }
}

TEST_CASE("power_of_linear expands binomially") {
    FieldRef q = Field::rationals();
    LinearForm xy{Scalar(q, 1), Scalar(q, 1), VarTag::primal};
    CHECK(coeff_longs(power_of_linear(xy, 2)) == std::vector<long>{1, 2, 1});

    LinearForm x{Scalar(q, 1), Scalar(q, 0), VarTag::primal};
    CHECK(coeff_longs(power_of_linear(x, 5)) == std::vector<long>{1, 0, 0, 0, 0, 0});

    LinearForm l{Scalar(q, 2), Scalar(q, -1), VarTag::primal};
    CHECK(coeff_longs(power_of_linear(l, 3)) == std::vector<long>{8, -12, 6, -1});
}

TEST_CASE("apolar action differentiates literally") {
    FieldRef q = Field::rationals();
    BinaryForm u = parse_form("u", q);
    BinaryForm x2 = q_form_of("x^2");
    CHECK(to_string(apolar_action(u, x2)) == "2*x");

    BinaryForm op = parse_form("u^2 + v^2", q);
    BinaryForm f = q_form_of("x^2*y^2");
    CHECK(to_string(apolar_action(op, f)) == "2*x^2 + 2*y^2");

    CHECK_THROWS_AS(apolar_action(q_form_of("x"), q_form_of("x^2")), Error);  // same tag
    CHECK_THROWS_AS(apolar_action(parse_form("u^3", q), x2), Error);          // degree
}

TEST_CASE("apolar action: chain rule identity on powers of linear forms") {
    // g . (ax+by)^d = d!/(d-e)! * g(a,b) * (ax+by)^{d-e}
    FieldRef q = Field::rationals();
    Rng rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const int d = 1 + static_cast<int>(rng.below(9));
        const int e = static_cast<int>(rng.below(d + 1));
        LinearForm l = random_linear(q, rng, 10);
        BinaryForm g = random_form(q, rng, e, 10, VarTag::dual);
        BinaryForm lhs = apolar_action(g, power_of_linear(l, d));
        Scalar factor(q, mpz_class(factorial(d) / factorial(d - e)));
        BinaryForm rhs = scale(power_of_linear(l, d - e), factor * eval(g, l.a, l.b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("apolar action composes multiplicatively") {
    FieldRef q = Field::rationals();
    Rng rng(19);
    for (int rep = 0; rep < 50; ++rep) {
        const int e1 = static_cast<int>(rng.below(3));
        const int e2 = static_cast<int>(rng.below(3));
        const int d = e1 + e2 + static_cast<int>(rng.below(4));
        BinaryForm g1 = random_form(q, rng, e1, 8, VarTag::dual);
        BinaryForm g2 = random_form(q, rng, e2, 8, VarTag::dual);
        BinaryForm f = random_form(q, rng, d, 8, VarTag::primal);
        CHECK(apolar_action(mul(g1, g2), f) == apolar_action(g1, apolar_action(g2, f)));
    }
}

TEST_CASE("gcd of binary forms") {
    FieldRef q = Field::rationals();
    CHECK(to_string(gcd(q_form_of("x^2*y"), q_form_of("x*y^2"))) == "x*y");
    CHECK(gcd(q_form_of("x^2 + x*y"), q_form_of("y^2 + x*y")).degree() == 1);
    CHECK(gcd(q_form_of("x^2+y^2"), q_form_of("x + y")).degree() == 0);  // coprime

    // over F_5: x^2 + y^2 = (x+2y)(x+3y)
    FieldRef f5 = Field::prime(5);
    BinaryForm prod = mul(parse_form("x + 2y", f5), parse_form("x + 3y", f5));
    CHECK(prod == parse_form("x^2 + y^2", f5));
    BinaryForm g = gcd(parse_form("x^2 + y^2", f5), parse_form("x + 2y", f5));
    CHECK(g == parse_form("x + 2y", f5));
}

TEST_CASE("squarefree profile, including roots at infinity") {
    auto profile = squarefree_profile(q_form_of("x^3*y + x^2*y^2"));  // x^2 * y * (x+y)
    REQUIRE(profile.size() == 2);
    CHECK(profile[0].multiplicity == 1);
    CHECK(profile[0].radical_degree == 2);
    CHECK(profile[1].multiplicity == 2);
    CHECK(profile[1].radical_degree == 1);

    auto sq = squarefree_profile(q_form_of("x^2 + x*y - y^2"));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].multiplicity == 1);
    CHECK(sq[0].radical_degree == 2);

    auto cube = squarefree_profile(q_form_of("x^3"));
    REQUIRE(cube.size() == 1);
    CHECK(cube[0].multiplicity == 3);
    CHECK(cube[0].radical_degree == 1);

    auto ypow = squarefree_profile(q_form_of("y^4"));
    REQUIRE(ypow.size() == 1);
    CHECK(ypow[0].multiplicity == 4);

    CHECK(is_squarefree(q_form_of("x^2*y + x*y^2")));       // x y (x+y)
    CHECK_FALSE(is_squarefree(q_form_of("x^2*y")));
    CHECK_FALSE(is_squarefree(mul(q_form_of("x^2 + 2x*y + y^2"), q_form_of("x - 3y"))));
}

TEST_CASE("profile multiplicities account for the whole degree") {
    FieldRef q = Field::rationals();
    Rng rng(23);
    for (int rep = 0; rep < 100; ++rep) {
        const int d = 1 + static_cast<int>(rng.below(10));
        BinaryForm f = random_form(q, rng, d, 10, VarTag::primal);
        int total = 0;
        for (const auto& e : squarefree_profile(f)) total += e.multiplicity * e.radical_degree;
        CHECK(total == d);
    }
}

TEST_CASE("resultant convention and values") {
    FieldRef q = Field::rationals();
    // shared root (0:1) forces a zero resultant; coprime pairs keep it nonzero
    CHECK(resultant(q_form_of("x*y"), q_form_of("x^2 + x*y")).is_zero());
    CHECK_FALSE(resultant(q_form_of("x*y"), q_form_of("x^2 - y^2")).is_zero());
    CHECK(resultant(q_form_of("x"), q_form_of("y")) == Scalar(q, 1));
    // roots 1,2 against root 3: +(1-3)(2-3) = +2 in this convention
    CHECK(resultant(q_form_of("x^2 - 3x*y + 2y^2"), q_form_of("x - 3y")) == Scalar(q, 2));
    CHECK_THROWS_AS(resultant(BinaryForm(q, VarTag::primal, 2), q_form_of("x")), Error);
}

TEST_CASE("resultant vanishes exactly on common factors") {
    FieldRef q = Field::rationals();
    Rng rng(29);
    for (int rep = 0; rep < 200; ++rep) {
        const int m = 1 + static_cast<int>(rng.below(4));
        const int n = 1 + static_cast<int>(rng.below(4));
        BinaryForm f = random_form(q, rng, m, 6, VarTag::primal);
        BinaryForm g = random_form(q, rng, n, 6, VarTag::primal);
        if (rep % 3 == 0) {
            // plant a shared root
            LinearForm l = random_linear(q, rng, 6);
            f = mul(f, power_of_linear(l, 1));
            g = mul(g, power_of_linear(l, 1));
        }
        const bool res_zero = resultant(f, g).is_zero();
        const bool common = gcd(f, g).degree() > 0;
        CHECK(res_zero == common);
    }
}

TEST_CASE("discriminant normalization") {
    FieldRef q = Field::rationals();
    CHECK(discriminant(q_form_of("u^2 - v^2")) == Scalar(q, 4));
    CHECK(discriminant(q_form_of("u^2")).is_zero());
    CHECK_THROWS_AS(discriminant(q_form_of("x")), Error);

    // depressed cubic: disc(u^3 + p u v^2 + q v^3) = -4p^3 - 27q^2
    for (long p = -3; p <= 3; ++p) {
        for (long qq = -3; qq <= 3; ++qq) {
            BinaryForm f(q, VarTag::dual, 3);
            f[0] = Scalar(q, 1);
            f[2] = Scalar(q, p);
            f[3] = Scalar(q, qq);
            CHECK(discriminant(f) == Scalar(q, -4 * p * p * p - 27 * qq * qq));
        }
    }
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
    FieldRef q = Field::rationals();
    Rng rng(31);
    for (int rep = 0; rep < 200; ++rep) {
        const int d = 2 + static_cast<int>(rng.below(6));
        BinaryForm f(q, VarTag::primal, d);
        if (rep % 3 == 0) {
            // plant a double root (possibly at infinity)
            LinearForm l = random_linear(q, rng, 8);
            f = mul(power_of_linear(l, 2), random_form(q, rng, d - 2, 8, VarTag::primal));
        } else {
            f = random_form(q, rng, d, 8, VarTag::primal);
        }
        bool has_multiple = false;
        for (const auto& e : squarefree_profile(f))
            if (e.multiplicity >= 2) has_multiple = true;
        CHECK(discriminant(f).is_zero() == has_multiple);
    }
}

TEST_CASE("roots over the rationals") {
    FieldRef q = Field::rationals();
    RootReport rep = roots_in_field(q_form_of("x^2 - y^2"));
    CHECK(rep.split);
    REQUIRE(rep.roots.size() == 2);

    RootReport none = roots_in_field(q_form_of("x^2 + y^2"));
    CHECK_FALSE(none.split);
    CHECK(none.roots.empty());

    // large coefficients exercise the modular lifting path
    BinaryForm big = mul(q_form_of("70001x + 3y"), q_form_of("2x - 9999y"));
    RootReport r2 = roots_in_field(big);
    CHECK(r2.split);
    REQUIRE(r2.roots.size() == 2);
    for (const auto& [pt, mult] : r2.roots) {
        CHECK(mult == 1);
        CHECK(eval(big, pt.s, pt.t).is_zero());
    }

    // multiplicities, including both ends
    BinaryForm fancy = mul(mul(q_form_of("x^2"), q_form_of("y^3")),
                           power_of_linear(LinearForm{Scalar(q, 1), Scalar(q, -2)}, 2));
    RootReport r3 = roots_in_field(fancy);
    CHECK(r3.split);
    int total = 0;
    for (const auto& [pt, mult] : r3.roots) total += mult;
    CHECK(total == 7);
}

TEST_CASE("roots over a prime field by exhaustive scan") {
    FieldRef f5 = Field::prime(5);
    RootReport rep = roots_in_field(parse_form("x^2 + y^2", f5));
    CHECK(rep.split);
    REQUIRE(rep.roots.size() == 2);
    for (const auto& [pt, mult] : rep.roots) {
        CHECK(mult == 1);
        CHECK(eval(parse_form("x^2 + y^2", f5), pt.s, pt.t).is_zero());
    }
}

TEST_CASE("divide_root strips one linear factor") {
    FieldRef q = Field::rationals();
    BinaryForm f = q_form_of("x^2 - y^2");
    ProjectivePoint one{Scalar(q, 1), Scalar(q, 1)};
    BinaryForm g = divide_root(f, one);
    CHECK(g.degree() == 1);
    CHECK(eval(f, Scalar(q, 1), Scalar(q, 1)).is_zero());
    CHECK_THROWS_AS(divide_root(f, ProjectivePoint{Scalar(q, 2), Scalar(q, 1)}), Error);
}
