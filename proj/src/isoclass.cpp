#include "cendiv/isoclass.hpp"
#include "cendiv/errors.hpp"
#include "cendiv/factor.hpp"

#include <algorithm>

namespace cendiv {

namespace {

constexpr int kRationalDegreeGuard = 16;

// Resultant over Q by the Euclidean remainder sequence; used only for the
// discriminant-sign pre-filter.
Rational resultant_q(Poly a, Poly b) {
    Rational acc(1);
    bool negate = false;
    while (true) {
        if (b.is_zero()) return Rational(0);
        if (b.degree() == 0) {
            Rational lc = std::get<Rational>(b.leading());
            Rational r(1);
            for (int i = 0; i < a.degree(); ++i) r *= lc;
            Rational out = acc * r;
            return negate ? Rational(-out) : out;
        }
        Poly rem = poly_divmod(a, b).second;
        if ((a.degree() % 2) == 1 && (b.degree() % 2) == 1) negate = !negate;
        Rational lc = std::get<Rational>(b.leading());
        int drop = a.degree() - rem.degree();
        Rational scale(1);
        for (int i = 0; i < drop; ++i) scale *= lc;
        acc *= scale;
        a = std::move(b);
        b = std::move(rem);
    }
}

int discriminant_sign(const Poly& p) {
    // disc = (-1)^{n(n-1)/2} res(p, p') / lc; p monic
    Rational res = resultant_q(p, p.derivative());
    int sign = sgn(res);
    int n = p.degree();
    if (((static_cast<long>(n) * (n - 1)) / 2) % 2 == 1) sign = -sign;
    return sign;
}

// Sorted degrees of the irreducible factors of the primitive integer model of
// p modulo a prime q; empty when q is not usable (lc vanishes or not squarefree).
std::vector<int> mod_p_shape(const Poly& p, std::int64_t q) {
    BigInt den_lcm = 1;
    for (int i = 0; i <= p.degree(); ++i)
        den_lcm = lcm(den_lcm, BigInt(std::get<Rational>(p.coeff(i)).get_den()));

    Field fq = Field::finite(q);
    std::vector<FieldElem> cs;
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational c = std::get<Rational>(p.coeff(i));
        BigInt z = BigInt(c.get_num()) * (den_lcm / BigInt(c.get_den()));
        cs.push_back(fq.from_integer(z));
    }
    Poly pm = Poly::from_coeffs(fq, std::move(cs));
    if (pm.degree() != p.degree()) return {};
    pm = pm.monic();
    if (poly_gcd(pm, pm.derivative()).degree() != 0) return {};

    Factorization fac = factor(pm);
    std::vector<int> shape;
    for (const auto& [base, exp] : fac.factors)
        for (int i = 0; i < exp; ++i) shape.push_back(base.degree());
    std::sort(shape.begin(), shape.end());
    return shape;
}

// Factorization shapes modulo the first `count` primes good for both inputs.
// A mismatch certifies non-isomorphism (at such primes the shape equals the
// splitting type of the prime in the common number field).
bool mod_p_shapes_agree(const Poly& p1, const Poly& p2, int count) {
    int seen = 0;
    for (std::int64_t q = 3; seen < count && q < 500; q += 2) {
        if (!is_prime_i64(q)) continue;
        std::vector<int> s1 = mod_p_shape(p1, q);
        if (s1.empty()) continue;
        std::vector<int> s2 = mod_p_shape(p2, q);
        if (s2.empty()) continue;
        ++seen;
        if (s1 != s2) return false;
    }
    return true;
}

// The norm polynomial N(x) = Res_t(p2(t), p1(x - s t)) computed in matrix
// form: N is the characteristic polynomial of C1 (x) I + s I (x) C2 on the
// tensor product, whose eigenvalues are exactly alpha + s*beta.
Poly norm_polynomial(const Poly& p1, const Poly& p2, int s) {
    const Field& f = p1.field();
    MatrixExact c1 = MatrixExact::companion(p1);
    MatrixExact c2 = MatrixExact::companion(p2);
    int d1 = c1.dim(), d2 = c2.dim();
    MatrixExact sum(f, d1 * d2);
    FieldElem shift = f.from_integer(s);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j) {
            const FieldElem& a = c1.at(i, j);
            if (f.is_zero(a)) continue;
            for (int k = 0; k < d2; ++k)
                sum.set(i * d2 + k, j * d2 + k, f.add(sum.at(i * d2 + k, j * d2 + k), a));
        }
    for (int k = 0; k < d2; ++k)
        for (int l = 0; l < d2; ++l) {
            FieldElem b = f.mul(shift, c2.at(k, l));
            if (f.is_zero(b)) continue;
            for (int i = 0; i < d1; ++i)
                sum.set(i * d2 + k, i * d2 + l, f.add(sum.at(i * d2 + k, i * d2 + l), b));
        }
    return char_poly(sum);
}

bool residue_iso_q(const Poly& p1, const Poly& p2) {
    const int d = p1.degree();
    if (d != p2.degree()) return false;
    if (p1 == p2) return true;
    if (d == 1) return true;
    if (d > kRationalDegreeGuard)
        throw capacity_error("residue_iso: capacity exceeded (rational degree > " +
                             std::to_string(kRationalDegreeGuard) + ")");

    if (discriminant_sign(p1) != discriminant_sign(p2)) return false;
    if (!mod_p_shapes_agree(p1, p2, 5)) return false;

    // decision of record: the norm method
    for (int attempt = 0; attempt < 101; ++attempt) {
        int s = (attempt % 2 == 1) ? (attempt + 1) / 2 : -(attempt / 2); // 0, 1, -1, 2, -2, ...
        Poly norm = norm_polynomial(p1, p2, s);
        if (poly_gcd(norm, norm.derivative()).degree() != 0) continue; // bad shift
        Factorization fac = factor(norm);
        for (const auto& [base, exp] : fac.factors)
            if (base.degree() == d) return true;
        return false;
    }
    throw internal_error("residue_iso: no squarefree shift found for separable inputs");
}

} // namespace

bool residue_iso(const Poly& p1, const Poly& p2) {
    require_same_field(p1.field(), p2.field(), "residue_iso");
    if (!p1.is_monic() || !p2.is_monic() || p1.degree() < 1 || p2.degree() < 1)
        throw precondition_error("residue_iso: inputs must be monic of degree >= 1");
    // guard first: a degree-17 query would otherwise start an unbounded
    // n^2-degree factorization
    if (p1.field().is_rationals() &&
        (p1.degree() > kRationalDegreeGuard || p2.degree() > kRationalDegreeGuard))
        throw capacity_error("residue_iso: capacity exceeded (rational degree > " +
                             std::to_string(kRationalDegreeGuard) + ")");
    if (!is_irreducible(p1) || !is_irreducible(p2))
        throw precondition_error("residue_iso: inputs must be irreducible");
    if (p1.field().is_finite())
        return p1.degree() == p2.degree();
    return residue_iso_q(p1, p2);
}

bool prime_power_iso(const Poly& base1, int exp1, const Poly& base2, int exp2) {
    if (exp1 != exp2) return false;
    return residue_iso(base1, base2);
}

bool prime_power_iso(const DivisorEntry& d1, const DivisorEntry& d2) {
    return prime_power_iso(d1.base, d1.exponent, d2.base, d2.exponent);
}

} // namespace cendiv
