#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cendiv/numeric.hpp"

namespace cendiv {

// Residue of F_{p^k}: coefficient vector of length k over [0, p),
// index = degree in the generator t.
using GFVec = std::vector<std::int64_t>;

// A scalar of the active field. Rationals hold an mpq in lowest terms with
// positive denominator; finite-field residues hold a reduced GFVec.
using FieldElem = std::variant<Rational, GFVec>;

namespace detail {
// Polynomials over F_p as bare coefficient vectors (trailing nonzero),
// used to validate moduli before a Field object exists.
using FpPoly = std::vector<std::int64_t>;
FpPoly fp_trim(FpPoly v);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly fp_mod(FpPoly a, const FpPoly& m, std::int64_t p);
FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p);
FpPoly fp_powmod_x(const BigInt& e, const FpPoly& m, std::int64_t p); // x^e mod m
bool fp_irreducible(const FpPoly& f, std::int64_t p);
} // namespace detail

// Which exact field all arithmetic happens in: Q, or F_{p^k} with an explicit
// monic irreducible modulus when k > 1. Value type; equality is structural and
// every cross-object operation requires equal descriptors.
class Field {
public:
    enum class Kind { rationals, finite };

    static Field rationals();
    // F_p (k = 1). Verifies p prime.
    static Field finite(std::int64_t p);
    // F_{p^k} with the given modulus: monic, degree k, irreducible over F_p
    // (verified). Coefficients are taken mod p; modulus[i] = coefficient of t^i.
    static Field finite(std::int64_t p, int k, std::vector<std::int64_t> modulus);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    bool is_finite() const { return kind_ == Kind::finite; }

    std::int64_t characteristic() const { return is_finite() ? p_ : 0; }
    std::int64_t p() const { return p_; }
    int extension_degree() const { return k_; }
    // Present iff k > 1; length k + 1, leading coefficient 1.
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    BigInt order() const; // p^k; only for finite fields

    bool operator==(const Field& o) const;
    bool operator!=(const Field& o) const { return !(*this == o); }

    // Short tag used in reports and hashes: "Q", "GF(5)", "GF(5^2)".
    std::string name() const;

    // --- element constructors ---
    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_integer(const BigInt& z) const;
    FieldElem from_integer(std::int64_t z) const { return from_integer(BigInt(z)); }
    FieldElem generator() const; // t; requires k > 1

    // --- arithmetic (operands must belong to this field) ---
    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem inv(const FieldElem& a) const; // throws on zero
    FieldElem div(const FieldElem& a, const FieldElem& b) const;

    bool is_zero(const FieldElem& a) const;
    bool is_one(const FieldElem& a) const;
    bool eq(const FieldElem& a, const FieldElem& b) const;

    // Canonical element string: rationals as "a" or "a/b"; finite fields as a
    // compact polynomial in t ("0", "2", "t+1", "t^2+2*t+4").
    std::string to_string(const FieldElem& a) const;

    // Total order used for canonical sorting (string compare on to_string).
    int cmp(const FieldElem& a, const FieldElem& b) const;

private:
    Field(Kind kind, std::int64_t p, int k, std::vector<std::int64_t> modulus)
        : kind_(kind), p_(p), k_(k), modulus_(std::move(modulus)) {}

    const GFVec& gf(const FieldElem& a) const;
    GFVec gf_reduce(GFVec v) const;

    Kind kind_;
    std::int64_t p_ = 0;
    int k_ = 1;
    std::vector<std::int64_t> modulus_;
};

} // namespace cendiv
