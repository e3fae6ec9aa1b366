#include <doctest.h>

#include "cendiv/errors.hpp"
#include "cendiv/oracle.hpp"
#include "cendiv/poly_io.hpp"
#include "helpers.hpp"

using namespace cendiv;
using namespace cendiv::testing;

TEST_CASE("brute centralizer dimension on fixed inputs") {
    Field q = Field::rationals();
    CHECK(brute_centralizer_dim(MatrixExact::identity(q, 3)) == 9);
    CHECK(brute_centralizer_dim(MatrixExact::block_diag({jordan(q, 2, 0), jordan(q, 1, 0)})) == 5);

    // nonderogatory: the centralizer is R[c], dimension = deg of the minimal poly
    MatrixExact comp = MatrixExact::companion(parse_poly(q, "x^3 - 2"));
    CHECK(brute_centralizer_dim(comp) == 3);
    CHECK(is_principal_cyclic(profile(comp)));

    MatrixExact big(q, 13);
    CHECK_THROWS_AS(brute_centralizer_dim(big), capacity_error);
}

TEST_CASE("random_similar realizes the requested multiset") {
    Field q = Field::rationals();
    MatrixExact nil = random_similar({{parse_poly(q, "x"), 3, 1}}, q, 1);
    CHECK(nil.dim() == 3);
    CHECK(nil.rank() == 2);
    CHECK((nil * nil * nil).is_zero());

    auto divs = std::vector<DivisorEntry>{{parse_poly(q, "x"), 2, 1}, {parse_poly(q, "x"), 1, 1}};
    MatrixExact m = random_similar(divs, q, 42);
    auto got = elementary_divisors(m);
    REQUIRE(got.size() == 2);
    CHECK(got[0].exponent == 1);
    CHECK(got[1].exponent == 2);

    // deterministic per seed
    CHECK(random_similar(divs, q, 42) == random_similar(divs, q, 42));
    CHECK(random_similar(divs, q, 42) != random_similar(divs, q, 43));

    // the 12x12 example profile sits exactly at the size guard
    auto divs12 = std::vector<DivisorEntry>{{parse_poly(q, "x - 1"), 3, 1},
                                            {parse_poly(q, "x - 1"), 4, 1},
                                            {parse_poly(q, "x"), 2, 1},
                                            {parse_poly(q, "x"), 3, 1}};
    MatrixExact c = random_similar(divs12, q, 7);
    CHECK(c.dim() == 12);
    auto back = elementary_divisors(c);
    CHECK(back.size() == 4);

    auto too_big = std::vector<DivisorEntry>{{parse_poly(q, "x"), 13, 1}};
    CHECK_THROWS_AS(random_similar(too_big, q, 1), capacity_error);
}

TEST_CASE("signed permutation congruence") {
    CHECK(congruence_by_signed_permutation({1, 2}, {2, 1}));
    CHECK(!congruence_by_signed_permutation({2, 2}, {3, 1}));
    // difference series of (5,4,1) vs (5,2,1): {1,3,1} vs {3,1,1}
    CHECK(congruence_by_signed_permutation({1, 3, 1}, {3, 1, 1}));
    CHECK_THROWS_AS(congruence_by_signed_permutation({1, 2}, {1}), precondition_error);
    CHECK_THROWS_AS(congruence_by_signed_permutation({1, 2, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7}),
                    capacity_error);
}

TEST_CASE("series congruence equals h-multiset equality (exhaustive, equal tops)") {
    auto seqs = decreasing_sequences(6, 3);
    for (const auto& a : seqs)
        for (const auto& b : seqs) {
            if (a.size() != b.size() || a.front() != b.front()) continue;
            bool via_matrices = series_cartan_congruent(a, b);
            bool via_h = h_multiset(a) == h_multiset(b);
            CHECK(via_matrices == via_h);
        }
}

TEST_CASE("a small slice of the selftest corpus is clean") {
    auto rows = run_selftest_corpus(12);
    REQUIRE(rows.size() == 12);
    for (const auto& row : rows) {
        CHECK(row.roundtrip_ok);
        CHECK(row.dim_ok);
        CHECK(row.total_degree <= 10);
    }
}
