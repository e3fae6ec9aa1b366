#include <doctest.h>

#include <algorithm>

#include "cendiv/divisor.hpp"
#include "cendiv/errors.hpp"
#include "cendiv/oracle.hpp"
#include "cendiv/poly_io.hpp"
#include "helpers.hpp"

using namespace cendiv;
using namespace cendiv::testing;

namespace {

bool divisors_equal(const std::vector<DivisorEntry>& a, const std::vector<DivisorEntry>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].base == b[i].base) || a[i].exponent != b[i].exponent ||
            a[i].multiplicity != b[i].multiplicity)
            return false;
    return true;
}

MatrixExact example_matrix_c(const Field& q) {
    return MatrixExact::block_diag(
        {jordan(q, 3, 1), jordan(q, 4, 1), jordan(q, 3, 0), jordan(q, 2, 0)});
}

} // namespace

TEST_CASE("elementary divisors of Jordan sums") {
    Field q = Field::rationals();
    auto divs = elementary_divisors(MatrixExact::block_diag({jordan(q, 3, 0), jordan(q, 2, 0)}));
    REQUIRE(divs.size() == 2);
    CHECK(divs[0].base == parse_poly(q, "x"));
    CHECK(divs[0].exponent == 2);
    CHECK(divs[0].multiplicity == 1);
    CHECK(divs[1].exponent == 3);

    // the 12x12 mixed sum: E = {x^2, x^3, (x-1)^3, (x-1)^4}
    auto divs12 = elementary_divisors(example_matrix_c(q));
    REQUIRE(divs12.size() == 4);
    std::vector<std::pair<std::string, int>> got;
    for (const auto& d : divs12) {
        got.emplace_back(d.base.to_string(), d.exponent);
        CHECK(d.multiplicity == 1);
    }
    std::vector<std::pair<std::string, int>> want = {
        {"x", 2}, {"x", 3}, {"x - 1", 3}, {"x - 1", 4}};
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("recovery is conjugation invariant") {
    Field f7 = Field::finite(7);
    SplitMix64 rng(404);
    MatrixExact m = MatrixExact::block_diag({jordan(f7, 3, 0), jordan(f7, 2, 0)});
    MatrixExact u = random_invertible(f7, 5, rng);
    auto divs = elementary_divisors(u * m * u.inverse());
    REQUIRE(divs.size() == 2);
    CHECK(divs[0].base == parse_poly(f7, "x"));
    CHECK(divs[0].exponent == 2);
    CHECK(divs[1].exponent == 3);
}

TEST_CASE("profile blocks and psets") {
    Field q = Field::rationals();
    DivisorProfile p = profile(example_matrix_c(q));
    CHECK(p.n == 12);
    REQUIRE(p.blocks.size() == 2);
    // canonical order: x^3 (degree 3) before (x-1)^4 (degree 4)
    CHECK(p.blocks[0].base == parse_poly(q, "x"));
    CHECK(p.blocks[0].exponent == 3);
    CHECK(p.blocks[0].pset == std::vector<int>{3, 2});
    CHECK(p.blocks[0].reducible);
    CHECK(p.blocks[0].divisor_string() == "x^3");
    CHECK(p.blocks[1].base == parse_poly(q, "x - 1"));
    CHECK(p.blocks[1].exponent == 4);
    CHECK(p.blocks[1].pset == std::vector<int>{4, 3});
    CHECK(p.blocks[1].divisor_string() == "(x - 1)^4");

    DivisorProfile single = profile(
        MatrixExact::block_diag({jordan(q, 5, 0), jordan(q, 4, 0), jordan(q, 2, 0)}));
    REQUIRE(single.blocks.size() == 1);
    CHECK(single.blocks[0].pset == std::vector<int>{5, 4, 2});
    CHECK(single.blocks[0].reducible);

    DivisorProfile id2 = profile(MatrixExact::identity(q, 2));
    REQUIRE(id2.blocks.size() == 1);
    CHECK(id2.blocks[0].base == parse_poly(q, "x - 1"));
    CHECK(id2.blocks[0].exponent == 1);
    CHECK(id2.blocks[0].pset == std::vector<int>{1});
    CHECK(!id2.blocks[0].reducible);
    CHECK(id2.divisors[0].multiplicity == 2);
}

TEST_CASE("transpose invariance") {
    Field f5 = Field::finite(5);
    SplitMix64 rng(2222);
    for (int iter = 0; iter < 10; ++iter) {
        int n = 2 + static_cast<int>(rng.below(6));
        MatrixExact m = random_matrix(f5, n, rng);
        auto a = elementary_divisors(m);
        auto b = elementary_divisors(m.transpose());
        CHECK(divisors_equal(a, b));
    }
}

TEST_CASE("h_multiset and j_set") {
    CHECK(h_multiset({5, 4, 2}) == std::vector<int>{2, 2, 1});
    CHECK(h_multiset({7}) == std::vector<int>{7});
    CHECK(h_multiset({5, 4, 1}) == std::vector<int>{3, 1, 1});
    CHECK_THROWS_AS(h_multiset({}), precondition_error);
    CHECK_THROWS_AS(h_multiset({3, 3}), precondition_error);

    CHECK(j_set({5, 3, 1}) == std::vector<int>{5, 4, 2});
    CHECK(j_set({9}) == std::vector<int>{9});
    CHECK(j_set({4, 3}) == std::vector<int>{4, 1});
    CHECK_THROWS_AS(j_set({}), precondition_error);
}

TEST_CASE("j is an involution and h is j-invariant (exhaustive)") {
    auto seqs = decreasing_sequences(12, 6);
    CHECK(seqs.size() == 2509);
    for (const auto& t : seqs) {
        CHECK(j_set(j_set(t)) == t);
        CHECK(h_multiset(j_set(t)) == h_multiset(t));
    }
}

TEST_CASE("centralizer dimension") {
    Field q = Field::rationals();
    MatrixExact m = MatrixExact::block_diag({jordan(q, 2, 0), jordan(q, 1, 0)});
    DivisorProfile p = profile(m);
    CHECK(centralizer_dim(p) == 5);
    CHECK(brute_centralizer_dim(m) == 5);

    DivisorProfile p3 = profile(jordan(q, 3, 0));
    CHECK(centralizer_dim(p3) == 3);

    DivisorProfile pid = profile(MatrixExact::identity(q, 4));
    CHECK(centralizer_dim(pid) == 16);
}

TEST_CASE("centralizer dimension agrees with the brute-force commutant") {
    SplitMix64 rng(808);
    for (const Field& f : {Field::finite(2), Field::finite(5), Field::rationals()}) {
        for (int iter = 0; iter < 8; ++iter) {
            int n = 1 + static_cast<int>(rng.below(6));
            MatrixExact m = random_matrix(f, n, rng, 3);
            CHECK(centralizer_dim(profile(m)) == brute_centralizer_dim(m));
        }
    }
}

TEST_CASE("is_principal_cyclic") {
    Field q = Field::rationals();
    auto mk = [&](std::vector<DivisorEntry> d) {
        return DivisorProfile::from_divisors(q, std::move(d));
    };
    CHECK(is_principal_cyclic(mk({{parse_poly(q, "x"), 3, 1}, {parse_poly(q, "x - 1"), 2, 1}})));
    CHECK(!is_principal_cyclic(mk({{parse_poly(q, "x"), 3, 1}, {parse_poly(q, "x"), 2, 1}})));
    CHECK(!is_principal_cyclic(profile(example_matrix_c(q))));
    CHECK(!is_principal_cyclic(mk({{parse_poly(q, "x"), 2, 2}})));
}

TEST_CASE("nilpotent jordan profile from ranks") {
    Field q = Field::rationals();
    MatrixExact a = MatrixExact::block_diag({jordan(q, 5, 0), jordan(q, 4, 0), jordan(q, 2, 0)});
    CHECK(jordan_profile_nilpotent(a) == std::vector<int>{5, 4, 2});
    MatrixExact b = MatrixExact::block_diag({jordan(q, 3, 0), jordan(q, 3, 0)});
    CHECK(jordan_profile_nilpotent(b) == std::vector<int>{3});
    CHECK(jordan_profile_nilpotent(MatrixExact(q, 4)) == std::vector<int>{1});
    CHECK_THROWS_AS(jordan_profile_nilpotent(MatrixExact::identity(q, 3)), precondition_error);

    // the rank route must agree with the profile pset on conjugated inputs
    SplitMix64 rng(4242);
    Field f3 = Field::finite(3);
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<MatrixExact> blocks;
        int total = 0;
        while (total < 6) {
            int sz = 1 + static_cast<int>(rng.below(4));
            blocks.push_back(jordan(f3, sz, 0));
            total += sz;
        }
        MatrixExact m = MatrixExact::block_diag(blocks);
        MatrixExact u = random_invertible(f3, m.dim(), rng);
        MatrixExact conj = u * m * u.inverse();
        DivisorProfile p = profile(conj);
        REQUIRE(p.blocks.size() == 1);
        CHECK(jordan_profile_nilpotent(conj) == p.blocks[0].pset);
    }
}

TEST_CASE("1x1 matrices are legal") {
    Field q = Field::rationals();
    MatrixExact m(q, 1);
    m.set(0, 0, q.from_integer(5));
    DivisorProfile p = profile(m);
    CHECK(p.n == 1);
    REQUIRE(p.blocks.size() == 1);
    CHECK(p.blocks[0].base == parse_poly(q, "x - 5"));
    CHECK(p.blocks[0].pset == std::vector<int>{1});
    CHECK(!p.blocks[0].reducible);
    CHECK(is_principal_cyclic(p));
}

TEST_CASE("dimension identity holds on random profiles") {
    SplitMix64 rng(31337);
    for (const Field& f : {Field::finite(2), Field::finite(5), Field::rationals()}) {
        for (int iter = 0; iter < 15; ++iter) {
            auto divs = random_divisor_multiset(f, 10, rng);
            DivisorProfile p = DivisorProfile::from_divisors(f, divs);
            int total = 0;
            for (const auto& d : p.divisors) total += d.exponent * d.base.degree() * d.multiplicity;
            CHECK(total == p.n);
            for (const auto& blk : p.blocks) {
                CHECK(blk.pset.front() == blk.exponent);
                CHECK(blk.reducible == (blk.exponent >= 2));
            }
        }
    }
}

TEST_CASE("high-multiplicity recovery at the oracle size boundary") {
    // two copies of x^3 and three of (x+1)^2 over F_2: 12 = the guard
    Field f2 = Field::finite(2);
    std::vector<DivisorEntry> divs = {{parse_poly(f2, "x"), 3, 2},
                                      {parse_poly(f2, "x + 1"), 2, 3}};
    MatrixExact m = random_similar(divs, f2, 99);
    CHECK(m.dim() == 12);
    auto out = elementary_divisors(m);
    REQUIRE(out.size() == 2);
    CHECK(out[0].base == parse_poly(f2, "x + 1"));
    CHECK(out[0].exponent == 2);
    CHECK(out[0].multiplicity == 3);
    CHECK(out[1].base == parse_poly(f2, "x"));
    CHECK(out[1].exponent == 3);
    CHECK(out[1].multiplicity == 2);
    CHECK(centralizer_dim(profile(m)) == brute_centralizer_dim(m));
}

TEST_CASE("construction round-trip through random_similar") {
    SplitMix64 rng(123);
    for (const Field& f : {Field::finite(3), Field::rationals()}) {
        for (int iter = 0; iter < 10; ++iter) {
            auto divs = random_divisor_multiset(f, 8, rng);
            DivisorProfile want = DivisorProfile::from_divisors(f, divs);
            MatrixExact m = random_similar(divs, f, rng.next());
            CHECK(divisors_equal(elementary_divisors(m), want.divisors));
        }
    }
}
