#include <doctest.h>

#include "waring/field.hpp"

using namespace waring;

TEST_CASE("field construction") {
    FieldRef q = Field::rationals();
    CHECK(q->kind() == FieldKind::rationals);
    CHECK(q->name() == "q");

    FieldRef f101 = Field::prime(101);
    CHECK(f101->is_prime_field());
    CHECK(f101->name() == "fp:101");

    CHECK_THROWS_AS(Field::prime(91), Error);  // 91 = 7 * 13
    CHECK_THROWS_AS(Field::prime(1), Error);
}

TEST_CASE("scalar canonical form") {
    FieldRef q = Field::rationals();
    Scalar a(q, mpq_class(2, 6));
    Scalar b(q, mpq_class(1, 3));
    CHECK(a == b);
    CHECK(a.str() == "1/3");
    CHECK(Scalar(q, mpq_class(-4, 8)).str() == "-1/2");

    FieldRef f7 = Field::prime(7);
    Scalar c(f7, -1);
    CHECK(c.str() == "6");
    Scalar d(f7, mpq_class(1, 2));  // 2^{-1} = 4 mod 7
    CHECK(d.str() == "4");
    CHECK(Scalar(f7, 9) == Scalar(f7, 2));
}

TEST_CASE("field axioms on random triples") {
    for (const FieldRef& field : {Field::rationals(), Field::prime(101)}) {
        Rng rng(123);
        for (int i = 0; i < 200; ++i) {
            Scalar a = random_scalar(field, rng, 50);
            Scalar b = random_scalar(field, rng, 50);
            Scalar c = random_scalar(field, rng, 50);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Scalar::zero(field));
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Scalar::one(field));
                CHECK((b / a) * a == b);
            }
        }
    }
}

TEST_CASE("division by zero rejected") {
    FieldRef q = Field::rationals();
    CHECK_THROWS_AS(Scalar::one(q) / Scalar::zero(q), Error);
}

TEST_CASE("random_scalar range and determinism") {
    FieldRef q = Field::rationals();
    Rng r1(0), r2(0);
    for (int i = 0; i < 100; ++i) {
        Scalar a = random_scalar(q, r1, 10);
        Scalar b = random_scalar(q, r2, 10);
        CHECK(a == b);  // same seed, same stream
        CHECK(a.value().get_den() == 1);
        CHECK(a.value() >= -10);
        CHECK(a.value() <= 10);
    }

    FieldRef f7 = Field::prime(7);
    Rng r3(0);
    for (int i = 0; i < 50; ++i) {
        Scalar a = random_scalar(f7, r3, 100);
        CHECK(a.value().get_num() >= 0);
        CHECK(a.value().get_num() < 7);
    }
}

TEST_CASE("rng fork is stable and independent") {
    Rng base(42);
    Rng f1 = base.fork(1);
    Rng f2 = base.fork(1);
    Rng f3 = base.fork(2);
    CHECK(f1.next() == f2.next());
    CHECK(Rng(42).fork(2).next() == f3.next());
}

TEST_CASE("characteristic guards") {
    FieldRef f7 = Field::prime(7);
    CHECK_NOTHROW(f7->ensure_degree_supported(6));
    CHECK_THROWS_AS(f7->ensure_degree_supported(7), Error);
    CHECK_THROWS_AS(f7->ensure_session_degree(3), Error);  // needs p > 2d+2 = 8
    CHECK_NOTHROW(Field::prime(11)->ensure_session_degree(4));
}
