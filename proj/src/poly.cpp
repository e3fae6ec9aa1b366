#include "cendiv/poly.hpp"
#include "cendiv/errors.hpp"

namespace cendiv {

void require_same_field(const Field& a, const Field& b, const char* what) {
    if (a != b)
        throw field_mismatch_error(std::string(what) + ": operands over different fields (" +
                                   a.name() + " vs " + b.name() + ")");
}

void Poly::trim() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back()))
        coeffs_.pop_back();
}

Poly Poly::x(const Field& f) { return monomial(f, f.one(), 1); }

Poly Poly::constant(const Field& f, FieldElem c) {
    Poly r(f);
    if (!f.is_zero(c)) r.coeffs_.push_back(std::move(c));
    return r;
}

Poly Poly::monomial(const Field& f, FieldElem c, int degree) {
    Poly r(f);
    if (f.is_zero(c)) return r;
    r.coeffs_.assign(degree + 1, f.zero());
    r.coeffs_[degree] = std::move(c);
    return r;
}

Poly Poly::from_coeffs(const Field& f, std::vector<FieldElem> coeffs) {
    Poly r(f);
    r.coeffs_ = std::move(coeffs);
    r.trim();
    return r;
}

FieldElem Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return field_.zero();
    return coeffs_[i];
}

const FieldElem& Poly::leading() const {
    if (is_zero())
        throw precondition_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(field_, o.field_, "poly add");
    Poly r(field_);
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    r.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        r.coeffs_.push_back(field_.add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i))));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_field(field_, o.field_, "poly sub");
    Poly r(field_);
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    r.coeffs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        r.coeffs_.push_back(field_.sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i))));
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_same_field(field_, o.field_, "poly mul");
    if (is_zero() || o.is_zero()) return Poly(field_);
    Poly r(field_);
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (field_.is_zero(coeffs_[i])) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] =
                field_.add(r.coeffs_[i + j], field_.mul(coeffs_[i], o.coeffs_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(field_.neg(c));
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (field_ != o.field_ || coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!field_.eq(coeffs_[i], o.coeffs_[i])) return false;
    return true;
}

Poly Poly::scaled(const FieldElem& c) const {
    Poly r(field_);
    if (field_.is_zero(c)) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& a : coeffs_) r.coeffs_.push_back(field_.mul(a, c));
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero())
        throw precondition_error("monic() of the zero polynomial");
    if (is_monic()) return *this;
    return scaled(field_.inv(leading()));
}

Poly Poly::derivative() const {
    Poly r(field_);
    if (degree() < 1) return r;
    r.coeffs_.reserve(coeffs_.size() - 1);
    for (int i = 1; i <= degree(); ++i)
        r.coeffs_.push_back(field_.mul(coeffs_[i], field_.from_integer(i)));
    r.trim();
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0)
        throw precondition_error("poly pow with negative exponent");
    Poly r = Poly::one(field_);
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElem Poly::eval(const FieldElem& at) const {
    FieldElem acc = field_.zero();
    for (int i = degree(); i >= 0; --i)
        acc = field_.add(field_.mul(acc, at), coeffs_[i]);
    return acc;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    const Field& f = field_;
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        FieldElem c = coeffs_[i];
        if (f.is_zero(c)) continue;
        bool negative = false;
        if (f.is_rationals()) {
            const Rational& q = std::get<Rational>(c);
            if (q < 0) {
                negative = true;
                c = f.neg(c);
            }
        }
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string cs = f.to_string(c);
        if (i == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") {
            bool needs_parens = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
            out += needs_parens ? "(" + cs + ")" : cs;
            out += "*";
        }
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field(), "poly divmod");
    if (b.is_zero())
        throw precondition_error("polynomial division by zero");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    FieldElem lc_inv = f.inv(b.leading());
    std::vector<FieldElem> rem = a.coeffs_;
    std::vector<FieldElem> quo(a.degree() - b.degree() + 1, f.zero());
    for (int i = a.degree(); i >= b.degree(); --i) {
        FieldElem c = f.mul(rem[i], lc_inv);
        if (f.is_zero(c)) continue;
        quo[i - b.degree()] = c;
        for (int j = 0; j <= b.degree(); ++j)
            rem[i - b.degree() + j] =
                f.sub(rem[i - b.degree() + j], f.mul(c, b.coeffs()[j]));
    }
    return {Poly::from_coeffs(f, std::move(quo)), Poly::from_coeffs(f, std::move(rem))};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero())
        throw internal_error("poly_divexact: division left a remainder");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field(), "poly_gcd");
    if (a.is_zero() && b.is_zero())
        throw precondition_error("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        // normalizing each remainder keeps rational coefficients small
        if (!r.is_zero()) r = r.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) {
    return poly_divmod(a * b, m).second;
}

Poly poly_powmod(const Poly& a, const BigInt& e, const Poly& m) {
    if (e < 0)
        throw precondition_error("poly_powmod with negative exponent");
    Poly r = poly_divmod(Poly::one(a.field()), m).second;
    Poly base = poly_divmod(a, m).second;
    BigInt exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) r = poly_mulmod(r, base, m);
        base = poly_mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

int poly_cmp(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    const Field& f = a.field();
    for (int i = a.degree(); i >= 0; --i) {
        std::string sa = f.to_string(a.coeff(i));
        std::string sb = f.to_string(b.coeff(i));
        if (sa != sb) return sa < sb ? -1 : 1;
    }
    return 0;
}

} // namespace cendiv
