#include <doctest.h>

#include "cendiv/errors.hpp"
#include "cendiv/matrix.hpp"
#include "cendiv/poly_io.hpp"
#include "helpers.hpp"

using namespace cendiv;
using namespace cendiv::testing;

TEST_CASE("nullity") {
    Field q = Field::rationals();
    CHECK(nullity(MatrixExact::identity(q, 3)) == 0);
    CHECK(nullity(MatrixExact(q, 4)) == 4);
    // J_3(0) has two unit rows, so rank 2
    CHECK(jordan(q, 3, 0).rank() == 2);
    CHECK(nullity(jordan(q, 3, 0)) == 1);
    CHECK_THROWS_AS(MatrixExact(q, 0), precondition_error);
}

TEST_CASE("char_poly on fixed inputs") {
    Field q = Field::rationals();
    CHECK(char_poly(jordan(q, 3, 1)) == parse_poly(q, "(x-1)^3"));

    Poly f = parse_poly(q, "x^2 + 1");
    CHECK(char_poly(MatrixExact::companion(f)) == f);

    // the 12x12 mixed Jordan sum: char poly is the product of block char polys
    MatrixExact c = MatrixExact::block_diag(
        {jordan(q, 3, 1), jordan(q, 4, 1), jordan(q, 3, 0), jordan(q, 2, 0)});
    CHECK(c.dim() == 12);
    CHECK(char_poly(c) == parse_poly(q, "x^5 * (x-1)^7"));
}

TEST_CASE("char_poly of block diagonal equals product of blocks") {
    Field f5 = Field::finite(5);
    SplitMix64 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        MatrixExact a = random_matrix(f5, 2 + static_cast<int>(rng.below(3)), rng);
        MatrixExact b = random_matrix(f5, 2 + static_cast<int>(rng.below(3)), rng);
        CHECK(char_poly(MatrixExact::block_diag({a, b})) == char_poly(a) * char_poly(b));
    }
}

TEST_CASE("char_poly is a similarity invariant") {
    SplitMix64 rng(7);
    for (const Field& f : {Field::finite(7), Field::rationals()}) {
        for (int iter = 0; iter < 15; ++iter) {
            int n = 2 + static_cast<int>(rng.below(7));
            MatrixExact m = random_matrix(f, n, rng, 5);
            MatrixExact u = random_invertible(f, n, rng);
            CHECK(char_poly(u * m * u.inverse()) == char_poly(m));
        }
    }
}

TEST_CASE("eval_poly_at_matrix") {
    Field q = Field::rationals();
    MatrixExact j2 = jordan(q, 2, 1);
    CHECK(eval_poly_at_matrix(parse_poly(q, "x"), j2) == j2);
    CHECK(eval_poly_at_matrix(parse_poly(q, "x - 1"), j2) == jordan(q, 2, 0));

    // Cayley-Hamilton on random matrices
    Field f5 = Field::finite(5);
    SplitMix64 rng(31);
    for (int iter = 0; iter < 15; ++iter) {
        int n = 1 + static_cast<int>(rng.below(8));
        MatrixExact m = random_matrix(f5, n, rng);
        CHECK(eval_poly_at_matrix(char_poly(m), m).is_zero());
    }
    for (int iter = 0; iter < 6; ++iter) {
        int n = 1 + static_cast<int>(rng.below(5));
        MatrixExact m = random_matrix(Field::rationals(), n, rng, 5);
        CHECK(eval_poly_at_matrix(char_poly(m), m).is_zero());
    }
}

TEST_CASE("rank + nullity = n") {
    SplitMix64 rng(13);
    for (const Field& f : {Field::finite(2), Field::finite(5), Field::rationals()}) {
        for (int iter = 0; iter < 20; ++iter) {
            int n = 1 + static_cast<int>(rng.below(8));
            MatrixExact m = random_matrix(f, n, rng);
            CHECK(m.rank() + nullity(m) == n);
        }
    }
}

TEST_CASE("inverse") {
    SplitMix64 rng(17);
    Field f25 = Field::finite(5, 2, {2, 0, 1});
    for (int iter = 0; iter < 10; ++iter) {
        int n = 1 + static_cast<int>(rng.below(6));
        MatrixExact u = random_invertible(f25, n, rng);
        CHECK(u * u.inverse() == MatrixExact::identity(f25, n));
    }
    CHECK_THROWS_AS(MatrixExact(Field::rationals(), 3).inverse(), precondition_error);
}

TEST_CASE("field mismatch is rejected") {
    MatrixExact a(Field::rationals(), 2);
    MatrixExact b(Field::finite(5), 2);
    CHECK_THROWS_AS(a * b, field_mismatch_error);
    CHECK_THROWS_AS(eval_poly_at_matrix(parse_poly(Field::finite(5), "x"), a),
                    field_mismatch_error);
}
