#include <doctest.h>

#include "cendiv/errors.hpp"
#include "cendiv/factor.hpp"
#include "cendiv/poly.hpp"
#include "cendiv/poly_io.hpp"

using namespace cendiv;

namespace {
Poly qp(const std::string& s) { return parse_poly(Field::rationals(), s); }
} // namespace

TEST_CASE("printer emits the canonical spacing") {
    CHECK(qp("x^3 + 2*x - 1/2").to_string() == "x^3 + 2*x - 1/2");
    CHECK(qp("0").to_string() == "0");
    CHECK(qp("-x").to_string() == "-x");
    CHECK(qp("x^2-2*x+1").to_string() == "x^2 - 2*x + 1");
    CHECK(qp("3").to_string() == "3");

    Field f25 = make_extension_field(5, 2);
    Poly p = parse_poly(f25, "x^2 + (t+1)*x + 2");
    CHECK(p.to_string() == "x^2 + (t+1)*x + 2");
}

TEST_CASE("parser accepts messy input") {
    CHECK(qp("x^3+2*x-1/2") == qp(" x ^ 3 + 2 * x - 1 / 2 "));
    CHECK(qp("(x-1)*(x+1)") == qp("x^2-1"));
    CHECK(qp("(x-1)^3") == qp("x^3 - 3*x^2 + 3*x - 1"));
    CHECK(qp("-(x-2)") == qp("2-x"));
    CHECK(qp("2*-3") == qp("-6"));
    CHECK_THROWS_AS(qp("x +"), parse_error);
    CHECK_THROWS_AS(qp("x + $"), parse_error);
    CHECK_THROWS_AS(qp("t + 1"), parse_error); // t undefined over Q
    CHECK_THROWS_AS(qp("1/(x+1)"), parse_error);
    CHECK_THROWS_AS(qp("1/0"), parse_error);
}

TEST_CASE("divmod leaves a small remainder and reassembles") {
    Field f5 = Field::finite(5);
    SplitMix64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<FieldElem> ac, bc;
        int da = static_cast<int>(rng.below(8)), db = static_cast<int>(rng.below(6));
        for (int i = 0; i <= da; ++i) ac.push_back(f5.from_integer(static_cast<int>(rng.below(5))));
        for (int i = 0; i <= db; ++i) bc.push_back(f5.from_integer(static_cast<int>(rng.below(5))));
        Poly a = Poly::from_coeffs(f5, ac), b = Poly::from_coeffs(f5, bc);
        if (b.is_zero()) continue;
        auto [q, r] = poly_divmod(a, b);
        CHECK(r.degree() < b.degree());
        CHECK(q * b + r == a);
    }
}

TEST_CASE("gcd spec examples") {
    // gcd(x^2, x) = x
    CHECK(poly_gcd(qp("x^2"), qp("x")) == qp("x"));
    // gcd(f, 0) = monic(f)
    CHECK(poly_gcd(qp("2*x + 2"), Poly::zero(Field::rationals())) == qp("x + 1"));
    CHECK_THROWS_AS(poly_gcd(Poly::zero(Field::rationals()), Poly::zero(Field::rationals())),
                    precondition_error);

    // gcd(x^4-1, x^6-1) over Q: oracle = factor both and intersect exponents
    Poly a = qp("x^4 - 1"), b = qp("x^6 - 1");
    Factorization fa = factor(a), fb = factor(b);
    Poly expected = Poly::one(Field::rationals());
    for (const auto& [base, ea] : fa.factors)
        for (const auto& [base2, eb] : fb.factors)
            if (base == base2) expected = expected * base.pow(std::min(ea, eb));
    CHECK(expected == qp("x^2 - 1"));
    CHECK(poly_gcd(a, b) == expected);
}

TEST_CASE("gcd divides both inputs and any common divisor divides it") {
    Field f7 = Field::finite(7);
    SplitMix64 rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<FieldElem> gc, ac, bc;
        for (int i = 0; i <= static_cast<int>(rng.below(3)); ++i)
            gc.push_back(f7.from_integer(static_cast<int>(rng.below(7))));
        gc.push_back(f7.one());
        Poly g = Poly::from_coeffs(f7, gc);
        for (int i = 0; i <= static_cast<int>(rng.below(4)); ++i)
            ac.push_back(f7.from_integer(static_cast<int>(rng.below(7))));
        ac.push_back(f7.one());
        for (int i = 0; i <= static_cast<int>(rng.below(4)); ++i)
            bc.push_back(f7.from_integer(static_cast<int>(rng.below(7))));
        bc.push_back(f7.one());
        Poly a = Poly::from_coeffs(f7, ac) * g, b = Poly::from_coeffs(f7, bc) * g;
        Poly d = poly_gcd(a, b);
        CHECK(poly_divmod(a, d).second.is_zero());
        CHECK(poly_divmod(b, d).second.is_zero());
        CHECK(poly_divmod(d, poly_gcd(d, g)).second.is_zero()); // g | d up to gcd
    }
}

TEST_CASE("canonical order sorts by degree then coefficient strings") {
    CHECK(poly_cmp(qp("x"), qp("x^2")) < 0);
    CHECK(poly_cmp(qp("x^2"), qp("x^2 + 1")) != 0);
    CHECK(poly_cmp(qp("x"), qp("x")) == 0);
}

TEST_CASE("parse of printed form round-trips") {
    Field f25 = make_extension_field(5, 2);
    SplitMix64 rng(23);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<FieldElem> cs;
        int d = static_cast<int>(rng.below(6));
        for (int i = 0; i <= d; ++i)
            cs.push_back(GFVec{static_cast<std::int64_t>(rng.below(5)),
                               static_cast<std::int64_t>(rng.below(5))});
        Poly p = Poly::from_coeffs(f25, cs);
        CHECK(parse_poly(f25, p.to_string()) == p);
    }
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<FieldElem> cs;
        int d = static_cast<int>(rng.below(6));
        for (int i = 0; i <= d; ++i) {
            std::int64_t num = static_cast<std::int64_t>(rng.below(11)) - 5;
            std::int64_t den = 1 + static_cast<std::int64_t>(rng.below(4));
            cs.push_back(make_rational(BigInt(num), BigInt(den)));
        }
        Poly p = Poly::from_coeffs(Field::rationals(), cs);
        CHECK(parse_poly(Field::rationals(), p.to_string()) == p);
    }
}
