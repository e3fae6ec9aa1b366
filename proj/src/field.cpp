#include "cendiv/field.hpp"
#include "cendiv/errors.hpp"

#include <algorithm>

namespace cendiv {

namespace detail {

FpPoly fp_trim(FpPoly v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod_i64(a[i], b[j], p)) % p;
    }
    return fp_trim(std::move(r));
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, std::int64_t p) {
    std::int64_t lc_inv = invmod_i64(m.back(), p);
    while (a.size() >= m.size()) {
        std::int64_t c = mulmod_i64(a.back(), lc_inv, p);
        if (c != 0) {
            std::size_t off = a.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i) {
                a[off + i] = (a[off + i] - mulmod_i64(c, m[i], p)) % p;
                if (a[off + i] < 0) a[off + i] += p;
            }
        }
        a.pop_back();
        a = fp_trim(std::move(a));
        if (a.size() < m.size()) break;
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::int64_t p) {
    a = fp_trim(std::move(a));
    b = fp_trim(std::move(b));
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        std::int64_t s = invmod_i64(a.back(), p);
        for (auto& c : a) c = mulmod_i64(c, s, p);
    }
    return a;
}

FpPoly fp_powmod_x(const BigInt& e, const FpPoly& m, std::int64_t p) {
    FpPoly base = fp_mod({0, 1}, m, p);
    FpPoly r = {1};
    BigInt exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t()))
            r = fp_mod(fp_mul(r, base, p), m, p);
        base = fp_mod(fp_mul(base, base, p), m, p);
        exp >>= 1;
    }
    return r;
}

// Rabin's test: f of degree n is irreducible over F_p iff x^{p^n} = x (mod f)
// and gcd(x^{p^{n/l}} - x, f) = 1 for every prime l | n.
bool fp_irreducible(const FpPoly& f, std::int64_t p) {
    FpPoly g = fp_trim(f);
    if (g.size() < 2) return false;
    int n = static_cast<int>(g.size()) - 1;
    if (n == 1) return true;

    std::vector<int> prime_divisors;
    int m = n;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_divisors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_divisors.push_back(m);

    BigInt pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
    FpPoly xq = fp_powmod_x(pn, g, p);
    // x^{p^n} - x must vanish mod f
    FpPoly diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] - 1) % p;
    if (diff[1] < 0) diff[1] += p;
    if (!fp_trim(diff).empty()) return false;

    for (int l : prime_divisors) {
        BigInt pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(n / l));
        FpPoly h = fp_powmod_x(pe, g, p);
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] - 1) % p;
        if (h[1] < 0) h[1] += p;
        h = fp_trim(std::move(h));
        if (h.empty()) return false; // x^{p^{n/l}} = x: proper subfield worth of roots
        if (fp_gcd(g, h, p).size() != 1) return false;
    }
    return true;
}

} // namespace detail

Field Field::rationals() { return Field(Kind::rationals, 0, 1, {}); }

Field Field::finite(std::int64_t p) {
    if (!is_prime_i64(p))
        throw precondition_error("field characteristic must be prime, got " + std::to_string(p));
    return Field(Kind::finite, p, 1, {});
}

Field Field::finite(std::int64_t p, int k, std::vector<std::int64_t> modulus) {
    if (!is_prime_i64(p))
        throw precondition_error("field characteristic must be prime, got " + std::to_string(p));
    if (k < 1)
        throw precondition_error("extension degree must be >= 1");
    if (k == 1) {
        if (!modulus.empty())
            throw precondition_error("prime field takes no modulus");
        return finite(p);
    }
    for (auto& c : modulus) {
        c %= p;
        if (c < 0) c += p;
    }
    modulus = detail::fp_trim(std::move(modulus));
    if (static_cast<int>(modulus.size()) != k + 1 || modulus.back() != 1)
        throw precondition_error("modulus must be monic of degree k");
    if (!detail::fp_irreducible(modulus, p))
        throw precondition_error("modulus is not irreducible over F_p");
    return Field(Kind::finite, p, k, std::move(modulus));
}

BigInt Field::order() const {
    if (!is_finite())
        throw precondition_error("order() requires a finite field");
    BigInt q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(k_));
    return q;
}

bool Field::operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
}

std::string Field::name() const {
    if (is_rationals()) return "Q";
    if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
    return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

const GFVec& Field::gf(const FieldElem& a) const {
    const GFVec* v = std::get_if<GFVec>(&a);
    if (!v)
        throw internal_error("finite-field operation on a rational element");
    return *v;
}

GFVec Field::gf_reduce(GFVec v) const {
    for (auto& c : v) {
        c %= p_;
        if (c < 0) c += p_;
    }
    if (static_cast<int>(v.size()) > k_) {
        detail::FpPoly m = (k_ == 1) ? detail::FpPoly{0, 1} : modulus_;
        v = detail::fp_mod(detail::fp_trim(std::move(v)), m, p_);
    }
    v.resize(k_, 0);
    return v;
}

FieldElem Field::zero() const {
    if (is_rationals()) return Rational(0);
    return GFVec(k_, 0);
}

FieldElem Field::one() const { return from_integer(1); }

FieldElem Field::from_integer(const BigInt& z) const {
    if (is_rationals()) return Rational(z);
    BigInt r = z % p_;
    if (r < 0) r += p_;
    GFVec v(k_, 0);
    v[0] = r.get_si();
    return v;
}

FieldElem Field::generator() const {
    if (!is_finite() || k_ < 2)
        throw precondition_error("generator() requires an extension field");
    GFVec v(k_, 0);
    v[1] = 1;
    return v;
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
    if (is_rationals()) return Rational(std::get<Rational>(a) + std::get<Rational>(b));
    const GFVec& x = gf(a); const GFVec& y = gf(b);
    GFVec r(k_);
    for (int i = 0; i < k_; ++i) r[i] = (x[i] + y[i]) % p_;
    return r;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
    if (is_rationals()) return Rational(std::get<Rational>(a) - std::get<Rational>(b));
    const GFVec& x = gf(a); const GFVec& y = gf(b);
    GFVec r(k_);
    for (int i = 0; i < k_; ++i) {
        r[i] = (x[i] - y[i]) % p_;
        if (r[i] < 0) r[i] += p_;
    }
    return r;
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
    if (is_rationals()) return Rational(std::get<Rational>(a) * std::get<Rational>(b));
    return gf_reduce(detail::fp_mul(detail::fp_trim(gf(a)), detail::fp_trim(gf(b)), p_));
}

FieldElem Field::neg(const FieldElem& a) const {
    if (is_rationals()) return Rational(-std::get<Rational>(a));
    const GFVec& x = gf(a);
    GFVec r(k_);
    for (int i = 0; i < k_; ++i) r[i] = x[i] == 0 ? 0 : p_ - x[i];
    return r;
}

FieldElem Field::inv(const FieldElem& a) const {
    if (is_zero(a))
        throw precondition_error("division by zero");
    if (is_rationals()) return Rational(1 / std::get<Rational>(a));
    if (k_ == 1) {
        GFVec r(1);
        r[0] = invmod_i64(gf(a)[0], p_);
        return r;
    }
    // extended Euclid in F_p[t] modulo the field modulus
    detail::FpPoly r0 = modulus_, r1 = detail::fp_trim(gf(a));
    detail::FpPoly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // long division r0 = q*r1 + rem, tracking the Bezout coefficient
        detail::FpPoly rem = r0, q;
        std::int64_t lc_inv = invmod_i64(r1.back(), p_);
        if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::int64_t c = mulmod_i64(rem.back(), lc_inv, p_);
            std::size_t off = rem.size() - r1.size();
            q[off] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                rem[off + i] = (rem[off + i] - mulmod_i64(c, r1[i], p_)) % p_;
                if (rem[off + i] < 0) rem[off + i] += p_;
            }
            rem = detail::fp_trim(std::move(rem));
        }
        detail::FpPoly qt1 = detail::fp_mul(detail::fp_trim(std::move(q)), t1, p_);
        detail::FpPoly t2 = t0;
        t2.resize(std::max(t2.size(), qt1.size()), 0);
        for (std::size_t i = 0; i < qt1.size(); ++i) {
            t2[i] = (t2[i] - qt1[i]) % p_;
            if (t2[i] < 0) t2[i] += p_;
        }
        t0 = std::move(t1);
        t1 = detail::fp_trim(std::move(t2));
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    // r0 = gcd(a, modulus), a unit since the modulus is irreducible
    std::int64_t s = invmod_i64(r0.empty() ? 1 : r0.back(), p_);
    for (auto& c : t0) c = mulmod_i64(c, s, p_);
    return gf_reduce(std::move(t0));
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const {
    return mul(a, inv(b));
}

bool Field::is_zero(const FieldElem& a) const {
    if (is_rationals()) return std::get<Rational>(a) == 0;
    const GFVec& x = gf(a);
    return std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; });
}

bool Field::is_one(const FieldElem& a) const { return eq(a, one()); }

bool Field::eq(const FieldElem& a, const FieldElem& b) const {
    if (is_rationals()) return std::get<Rational>(a) == std::get<Rational>(b);
    return gf(a) == gf(b);
}

std::string Field::to_string(const FieldElem& a) const {
    if (is_rationals()) return std::get<Rational>(a).get_str();
    const GFVec& x = gf(a);
    // compact polynomial in t, highest degree first, no spaces
    std::string s;
    for (int i = k_ - 1; i >= 0; --i) {
        if (x[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(x[i]);
        } else {
            if (x[i] != 1) s += std::to_string(x[i]) + "*";
            s += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

int Field::cmp(const FieldElem& a, const FieldElem& b) const {
    if (is_rationals()) return ::cmp(std::get<Rational>(a), std::get<Rational>(b));
    const GFVec& x = gf(a); const GFVec& y = gf(b);
    for (int i = k_ - 1; i >= 0; --i) {
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    }
    return 0;
}

} // namespace cendiv
