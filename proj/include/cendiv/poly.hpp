#pragma once

#include <string>
#include <vector>

#include "cendiv/field.hpp"

namespace cendiv {

// Dense univariate polynomial over the active field; index = degree.
// The zero polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class Poly {
public:
    explicit Poly(Field field) : field_(std::move(field)) {}

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return constant(f, f.one()); }
    static Poly x(const Field& f);
    static Poly constant(const Field& f, FieldElem c);
    static Poly monomial(const Field& f, FieldElem c, int degree);
    static Poly from_coeffs(const Field& f, std::vector<FieldElem> coeffs);

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && field_.is_one(coeffs_.back()); }

    // Coefficient of x^i (zero beyond the degree).
    FieldElem coeff(int i) const;
    const FieldElem& leading() const;
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const FieldElem& c) const;
    Poly monic() const; // divide by leading coefficient
    Poly derivative() const;
    Poly pow(int e) const;

    FieldElem eval(const FieldElem& at) const;

    // Printed form; see poly_io for the grammar. `var` is "x" everywhere
    // except moduli, which print in "t".
    std::string to_string(const std::string& var = "x") const;

    std::vector<FieldElem> coeffs_; // exposed for the I/O layer

private:
    Field field_;
    void trim();
};

// Quotient and remainder; divisor must be nonzero over the same field.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
// Exact quotient; throws internal_error if the remainder is nonzero.
Poly poly_divexact(const Poly& a, const Poly& b);

// Monic greatest common divisor. Lives here rather than in factor.cpp because
// everything downstream leans on it.
Poly poly_gcd(const Poly& a, const Poly& b);

// (a * b) mod m and a^e mod m.
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly poly_powmod(const Poly& a, const BigInt& e, const Poly& m);

// Canonical order for reports: by degree, then lexicographically on the
// canonical coefficient strings from the leading coefficient down.
int poly_cmp(const Poly& a, const Poly& b);

void require_same_field(const Field& a, const Field& b, const char* what);

} // namespace cendiv
