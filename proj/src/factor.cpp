#include "cendiv/factor.hpp"
#include "cendiv/errors.hpp"

#include <algorithm>
#include <map>

namespace cendiv {

namespace {

// ---------------------------------------------------------------------------
// shared helpers
// ---------------------------------------------------------------------------

void sort_factors(std::vector<std::pair<Poly, int>>& fs) {
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
        int c = poly_cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
}

void accumulate(std::map<std::string, std::pair<Poly, int>>& acc, const Poly& base, int exp) {
    std::string key = base.to_string();
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(key, std::make_pair(base, exp));
    else
        it->second.second += exp;
}

// ---------------------------------------------------------------------------
// squarefree decomposition
// ---------------------------------------------------------------------------

// Yun's algorithm, for Q.
std::vector<std::pair<Poly, int>> squarefree_yun(const Poly& f) {
    std::vector<std::pair<Poly, int>> out;
    Poly d = f.derivative();
    Poly g = poly_gcd(f, d);
    Poly w = poly_divexact(f, g);
    Poly y = poly_divexact(d, g);
    Poly z = y - w.derivative();
    int i = 1;
    while (w.degree() != 0) {
        Poly gi = poly_gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(gi, i);
        w = poly_divexact(w, gi);
        y = poly_divexact(z, gi);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

// f with f' = 0 is a p-th power; take the root (coefficients need the inverse
// Frobenius c^{p^{k-1}} over F_{p^k}).
Poly pth_root(const Poly& f) {
    const Field& fld = f.field();
    std::int64_t p = fld.characteristic();
    BigInt root_exp;
    mpz_ui_pow_ui(root_exp.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(fld.extension_degree() - 1));
    std::vector<FieldElem> coeffs;
    coeffs.reserve(f.degree() / p + 1);
    for (int i = 0; i <= f.degree(); i += p) {
        FieldElem c = f.coeff(i);
        if (fld.extension_degree() > 1) {
            FieldElem r = fld.one();
            FieldElem b = c;
            BigInt e = root_exp;
            while (e > 0) {
                if (mpz_odd_p(e.get_mpz_t())) r = fld.mul(r, b);
                b = fld.mul(b, b);
                e >>= 1;
            }
            c = r;
        }
        coeffs.push_back(c);
    }
    return Poly::from_coeffs(fld, std::move(coeffs));
}

// Char p: one gcd cascade takes the multiplicities coprime to p; what is left
// is a p-th power, peeled and recursed with the multiplier e*p.
void squarefree_charp(const Poly& f, int e, std::vector<std::pair<Poly, int>>& out) {
    if (f.degree() == 0) return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_charp(pth_root(f), e * static_cast<int>(f.field().characteristic()), out);
        return;
    }
    Poly c = poly_gcd(f, d);
    Poly w = poly_divexact(f, c);
    int i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly part = poly_divexact(w, y);
        if (part.degree() > 0) out.emplace_back(part, i * e);
        w = std::move(y);
        c = poly_divexact(c, w);
        ++i;
    }
    if (c.degree() > 0)
        squarefree_charp(pth_root(c), e * static_cast<int>(f.field().characteristic()), out);
}

// ---------------------------------------------------------------------------
// factorization over F_q
// ---------------------------------------------------------------------------

std::uint64_t content_seed(const Poly& f) {
    return fnv1a64(f.field().name() + ":" + f.to_string());
}

Poly random_poly_below(const Field& fld, int deg_bound, SplitMix64& rng) {
    std::vector<FieldElem> cs;
    cs.reserve(deg_bound);
    for (int i = 0; i < deg_bound; ++i) {
        GFVec v(fld.extension_degree());
        for (auto& x : v) x = static_cast<std::int64_t>(rng.below(fld.p()));
        cs.push_back(std::move(v));
    }
    return Poly::from_coeffs(fld, std::move(cs));
}

// Cantor-Zassenhaus equal-degree splitting of w, a product of distinct monic
// irreducibles all of degree d. Characteristic 2 uses the F_2-trace map.
void equal_degree_split(const Poly& w, int d, SplitMix64& rng, std::vector<Poly>& out) {
    if (w.degree() == d) {
        out.push_back(w);
        return;
    }
    const Field& fld = w.field();
    BigInt qd = fld.order();
    mpz_pow_ui(qd.get_mpz_t(), qd.get_mpz_t(), static_cast<unsigned long>(d));
    for (;;) {
        Poly r = random_poly_below(fld, w.degree(), rng);
        if (r.degree() < 1) continue;
        Poly g(fld);
        if (fld.p() != 2) {
            BigInt e = (qd - 1) / 2;
            Poly s = poly_powmod(r, e, w) - Poly::one(fld);
            g = poly_gcd(s, w);
        } else {
            int bits = fld.extension_degree() * d; // F_2-dimension of F_{q^d}
            Poly t = poly_divmod(r, w).second;
            Poly acc = t;
            for (int i = 1; i < bits; ++i) {
                t = poly_mulmod(t, t, w);
                acc = acc + t;
            }
            g = poly_gcd(acc, w);
        }
        if (g.degree() > 0 && g.degree() < w.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(poly_divexact(w, g), d, rng, out);
            return;
        }
    }
}

// Distinct-degree splitting, then equal-degree refinement. f monic squarefree.
std::vector<Poly> factor_squarefree_fq(const Poly& f, SplitMix64& rng) {
    std::vector<Poly> out;
    const Field& fld = f.field();
    const Poly x = Poly::x(fld);
    Poly v = f;
    Poly h = poly_divmod(x, v).second; // x^{q^d} mod v as d advances
    int d = 0;
    while (2 * (d + 1) <= v.degree()) {
        ++d;
        h = poly_powmod(h, fld.order(), v);
        Poly g = poly_gcd(h - poly_divmod(x, v).second, v);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            v = poly_divexact(v, g);
            if (v.degree() == 0) return out;
            h = poly_divmod(h, v).second;
        }
    }
    if (v.degree() > 0) out.push_back(v); // what remains is irreducible
    return out;
}

// ---------------------------------------------------------------------------
// factorization over Q: Zassenhaus
// ---------------------------------------------------------------------------

// Integer polynomials, little-endian coefficients, trailing nonzero.
using ZPoly = std::vector<BigInt>;

ZPoly z_trim(ZPoly v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return z_trim(std::move(r));
}

ZPoly z_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    r.resize(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return z_trim(std::move(r));
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    r.resize(std::max(a.size(), b.size()), BigInt(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return z_trim(std::move(r));
}

ZPoly z_mod(ZPoly a, const BigInt& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    return z_trim(std::move(a));
}

// symmetric residues in (-m/2, m/2]
ZPoly z_mod_sym(ZPoly a, const BigInt& m) {
    BigInt half = m / 2;
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    return z_trim(std::move(a));
}

// a = q*b + r with b monic, coefficients in Z/m.
std::pair<ZPoly, ZPoly> z_divmod_monic_mod(ZPoly a, const ZPoly& b, const BigInt& m) {
    a = z_mod(std::move(a), m);
    if (a.size() < b.size()) return {ZPoly{}, std::move(a)};
    const int bs = static_cast<int>(b.size());
    ZPoly q(a.size() - b.size() + 1, BigInt(0));
    for (int i = static_cast<int>(a.size()) - 1; i >= bs - 1; --i) {
        BigInt c = a[i];
        if (c == 0) continue;
        int off = i - (bs - 1);
        q[off] = c;
        for (int j = 0; j < bs; ++j) {
            a[off + j] -= c * b[j];
            a[off + j] %= m;
            if (a[off + j] < 0) a[off + j] += m;
        }
    }
    a.resize(b.size() - 1);
    return {z_trim(std::move(q)), z_trim(std::move(a))};
}

// Exact division test over Z for monic b; fills the quotient on success.
bool z_divides(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
    if (b.size() < 2 || a.size() < b.size()) return false;
    const int bs = static_cast<int>(b.size());
    ZPoly rem = a;
    ZPoly q(a.size() - b.size() + 1, BigInt(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= bs - 1; --i) {
        BigInt c = rem[i];
        if (c == 0) continue;
        int off = i - (bs - 1);
        q[off] = c;
        for (int j = 0; j < bs; ++j) rem[off + j] -= c * b[j];
    }
    for (int j = 0; j < bs - 1; ++j)
        if (rem[j] != 0) return false;
    quotient = z_trim(std::move(q));
    return true;
}

ZPoly z_from_fp(const detail::FpPoly& a) {
    ZPoly r;
    r.reserve(a.size());
    for (auto c : a) r.emplace_back(c);
    return r;
}

detail::FpPoly fp_from_z(const ZPoly& a, std::int64_t p) {
    detail::FpPoly r;
    r.reserve(a.size());
    for (const auto& c : a) {
        BigInt m = c % p;
        if (m < 0) m += p;
        r.push_back(m.get_si());
    }
    return detail::fp_trim(std::move(r));
}

// Extended Euclid over F_p: (s, t) with s*a + t*b = 1 for coprime a, b.
std::pair<detail::FpPoly, detail::FpPoly> fp_bezout(const detail::FpPoly& a,
                                                    const detail::FpPoly& b, std::int64_t p) {
    detail::FpPoly r0 = a, r1 = b;
    detail::FpPoly s0 = {1}, s1 = {};
    detail::FpPoly t0 = {}, t1 = {1};
    auto sub_mul = [p](const detail::FpPoly& u, const detail::FpPoly& qq, const detail::FpPoly& v) {
        detail::FpPoly qv = detail::fp_mul(qq, v, p);
        detail::FpPoly r = u;
        r.resize(std::max(r.size(), qv.size()), 0);
        for (std::size_t i = 0; i < qv.size(); ++i) {
            r[i] = (r[i] - qv[i]) % p;
            if (r[i] < 0) r[i] += p;
        }
        return detail::fp_trim(std::move(r));
    };
    while (!r1.empty()) {
        detail::FpPoly rem = r0, q;
        std::int64_t lc_inv = invmod_i64(r1.back(), p);
        if (rem.size() >= r1.size()) q.resize(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::int64_t c = mulmod_i64(rem.back(), lc_inv, p);
            std::size_t off = rem.size() - r1.size();
            q[off] = c;
            for (std::size_t i = 0; i < r1.size(); ++i) {
                rem[off + i] = (rem[off + i] - mulmod_i64(c, r1[i], p)) % p;
                if (rem[off + i] < 0) rem[off + i] += p;
            }
            rem = detail::fp_trim(std::move(rem));
        }
        q = detail::fp_trim(std::move(q));
        detail::FpPoly s2 = sub_mul(s0, q, s1);
        detail::FpPoly t2 = sub_mul(t0, q, t1);
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.size() != 1)
        throw internal_error("fp_bezout: inputs not coprime");
    std::int64_t inv = invmod_i64(r0[0], p);
    for (auto& c : s0) c = mulmod_i64(c, inv, p);
    for (auto& c : t0) c = mulmod_i64(c, inv, p);
    return {s0, t0};
}

// One quadratic Hensel step: from f = g*h, s*g + t*h = 1 (mod m) to the same
// congruences mod m2, where m | m2 | m^2 and f, g, h are monic.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const BigInt& m2) {
    ZPoly e = z_mod(z_sub(f, z_mul(g, h)), m2);
    auto [q, r] = z_divmod_monic_mod(z_mul(s, e), h, m2);
    ZPoly g1 = z_mod(z_add(z_add(g, z_mul(t, e)), z_mul(q, g)), m2);
    ZPoly h1 = z_mod(z_add(h, r), m2);
    ZPoly b = z_mod(z_sub(z_add(z_mul(s, g1), z_mul(t, h1)), ZPoly{BigInt(1)}), m2);
    auto [c, d] = z_divmod_monic_mod(z_mul(s, b), h1, m2);
    ZPoly s1 = z_mod(z_sub(s, d), m2);
    ZPoly t1 = z_mod(z_sub(z_sub(t, z_mul(t, b)), z_mul(c, g1)), m2);
    if (g1.size() != g.size() || h1.size() != h.size() || g1.back() != 1 || h1.back() != 1)
        throw internal_error("hensel_step: lift lost monicity");
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// Lift the mod-p factor list of monic f to mod target by a binary split.
std::vector<ZPoly> hensel_lift_list(const ZPoly& f, const std::vector<detail::FpPoly>& parts,
                                    std::int64_t p, const BigInt& target) {
    if (parts.size() == 1)
        return {z_mod(f, target)};
    std::size_t half = parts.size() / 2;
    detail::FpPoly a0 = {1}, b0 = {1};
    for (std::size_t i = 0; i < half; ++i) a0 = detail::fp_mul(a0, parts[i], p);
    for (std::size_t i = half; i < parts.size(); ++i) b0 = detail::fp_mul(b0, parts[i], p);
    auto [s0, t0] = fp_bezout(a0, b0, p);

    ZPoly g = z_from_fp(a0), h = z_from_fp(b0), s = z_from_fp(s0), t = z_from_fp(t0);
    BigInt m(p);
    while (m < target) {
        BigInt m2 = m * m;
        if (m2 > target) m2 = target; // capping keeps the recursion's inputs exact
        hensel_step(z_mod(f, m2), g, h, s, t, m2);
        m = m2;
    }
    std::vector<detail::FpPoly> left(parts.begin(), parts.begin() + half);
    std::vector<detail::FpPoly> right(parts.begin() + half, parts.end());
    std::vector<ZPoly> out = hensel_lift_list(g, left, p, target);
    std::vector<ZPoly> more = hensel_lift_list(h, right, p, target);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

// Landau-Mignotte: a monic factor of monic H has |coeff| <= 2^{n-1} * ||H||_2.
BigInt factor_coeff_bound(const ZPoly& h) {
    BigInt sum = 0;
    for (const auto& c : h) sum += c * c;
    BigInt norm = sqrt(sum) + 1;
    BigInt two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(h.size() - 1));
    return two_pow * norm;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t s = idx.size();
    for (std::size_t i = s; i-- > 0;) {
        if (idx[i] < n - (s - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Monic squarefree integer polynomial -> monic irreducible integer factors.
std::vector<ZPoly> factor_monic_squarefree_z(ZPoly h) {
    std::vector<ZPoly> out;
    if (h.size() <= 2) {
        if (h.size() == 2) out.push_back(std::move(h));
        return out;
    }

    // good prime: h mod p stays squarefree (h is monic, so lc never drops)
    std::int64_t p = 0;
    for (std::int64_t cand = 3;; cand += 2) {
        if (!is_prime_i64(cand)) continue;
        detail::FpPoly hm = fp_from_z(h, cand);
        detail::FpPoly d;
        for (std::size_t i = 1; i < hm.size(); ++i)
            d.push_back(mulmod_i64(hm[i], static_cast<std::int64_t>(i % cand), cand));
        d = detail::fp_trim(std::move(d));
        if (d.empty()) continue;
        if (detail::fp_gcd(hm, d, cand).size() == 1) {
            p = cand;
            break;
        }
    }

    Field fp = Field::finite(p);
    std::vector<FieldElem> cs;
    for (const auto& c : h) {
        BigInt m = c % p;
        if (m < 0) m += p;
        cs.push_back(fp.from_integer(m));
    }
    Poly hp = Poly::from_coeffs(fp, std::move(cs));
    SplitMix64 rng(content_seed(hp));
    std::vector<Poly> modular = factor_squarefree_fq(hp, rng);
    if (modular.size() == 1) {
        out.push_back(std::move(h));
        return out;
    }
    std::sort(modular.begin(), modular.end(),
              [](const Poly& a, const Poly& b) { return poly_cmp(a, b) < 0; });

    std::vector<detail::FpPoly> parts;
    for (const Poly& m : modular) {
        detail::FpPoly v;
        for (int i = 0; i <= m.degree(); ++i)
            v.push_back(std::get<GFVec>(m.coeff(i))[0]);
        parts.push_back(std::move(v));
    }

    BigInt bound = factor_coeff_bound(h);
    BigInt target(p);
    while (target <= 2 * bound) target *= p;
    std::vector<ZPoly> lifted = hensel_lift_list(z_mod(h, target), parts, p, target);

    // recombination: subsets of the modular factors against symmetric residues
    std::vector<std::size_t> pool(lifted.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    std::size_t s = 1;
    while (2 * s <= pool.size()) {
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        bool removed = false;
        do {
            ZPoly prod{BigInt(1)};
            for (std::size_t i : idx) prod = z_mod(z_mul(prod, lifted[pool[i]]), target);
            ZPoly candpoly = z_mod_sym(std::move(prod), target);
            ZPoly quotient;
            if (z_divides(h, candpoly, quotient)) {
                out.push_back(std::move(candpoly));
                h = std::move(quotient);
                std::vector<std::size_t> keep;
                for (std::size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) { ++j; continue; }
                    keep.push_back(pool[i]);
                }
                pool = std::move(keep);
                removed = true;
                break;
            }
        } while (next_combination(idx, pool.size()));
        if (!removed) ++s;
    }
    if (h.size() > 1) out.push_back(std::move(h));
    return out;
}

// monic rational polynomial -> primitive integer polynomial, lead > 0
ZPoly clear_denominators(const Poly& g, BigInt& lead) {
    BigInt lcm_den = 1;
    for (int i = 0; i <= g.degree(); ++i) {
        const Rational q = std::get<Rational>(g.coeff(i));
        lcm_den = lcm(lcm_den, BigInt(q.get_den()));
    }
    ZPoly v;
    BigInt content = 0;
    for (int i = 0; i <= g.degree(); ++i) {
        const Rational q = std::get<Rational>(g.coeff(i));
        BigInt c = BigInt(q.get_num()) * (lcm_den / BigInt(q.get_den()));
        content = gcd(content, c);
        v.push_back(std::move(c));
    }
    if (content > 1)
        for (auto& c : v) c /= content;
    lead = v.back();
    return v;
}

std::vector<Poly> factor_squarefree_q(const Poly& g) {
    const Field& fld = g.field();
    BigInt lead;
    ZPoly G = clear_denominators(g, lead);
    const std::size_t n = G.size() - 1;

    // monicize: H(x) = lead^{n-1} * G(x/lead), so H[i] = G[i] * lead^{n-1-i}
    ZPoly H(G.size());
    H[n] = 1;
    BigInt pw = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        H[n - j] = G[n - j] * pw;
        pw *= lead;
    }

    std::vector<ZPoly> zfactors = factor_monic_squarefree_z(std::move(H));

    // map back through x -> lead*x and renormalize to monic over Q
    std::vector<Poly> out;
    for (const ZPoly& u : zfactors) {
        std::vector<FieldElem> cs;
        BigInt upw = 1;
        for (std::size_t i = 0; i < u.size(); ++i) {
            cs.push_back(Rational(u[i] * upw));
            upw *= lead;
        }
        out.push_back(Poly::from_coeffs(fld, std::move(cs)).monic());
    }
    return out;
}

} // namespace

std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f) {
    if (f.is_zero())
        throw precondition_error("squarefree_decompose: zero input");
    if (!f.is_monic())
        throw precondition_error("squarefree_decompose: input must be monic");
    if (f.degree() == 0) return {};
    std::vector<std::pair<Poly, int>> out;
    if (f.field().is_rationals())
        out = squarefree_yun(f);
    else
        squarefree_charp(f, 1, out);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

Poly Factorization::reassemble(const Field& f) const {
    Poly r = Poly::constant(f, unit);
    for (const auto& [base, exp] : factors) r = r * base.pow(exp);
    return r;
}

Factorization factor(const Poly& f) {
    if (f.is_zero())
        throw precondition_error("factor: zero input");
    if (f.degree() == 0)
        throw precondition_error("factor: constant input rejected");

    Factorization result;
    result.unit = f.leading();
    Poly fm = f.monic();

    std::map<std::string, std::pair<Poly, int>> acc;
    if (f.field().is_rationals()) {
        for (const auto& [part, mult] : squarefree_decompose(fm))
            for (const Poly& irr : factor_squarefree_q(part))
                accumulate(acc, irr, mult);
    } else {
        SplitMix64 rng(content_seed(fm));
        for (const auto& [part, mult] : squarefree_decompose(fm))
            for (const Poly& irr : factor_squarefree_fq(part, rng))
                accumulate(acc, irr, mult);
    }
    for (auto& [key, pair] : acc)
        result.factors.push_back(std::move(pair));
    sort_factors(result.factors);
    return result;
}

bool is_irreducible(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw precondition_error("is_irreducible: requires a monic polynomial of degree >= 1");
    if (f.degree() == 1) return true;
    const Field& fld = f.field();
    if (fld.is_rationals()) {
        Factorization fac = factor(f);
        return fac.factors.size() == 1 && fac.factors[0].second == 1;
    }

    // Rabin: x^{q^n} = x mod f, and gcd(x^{q^{n/l}} - x, f) = 1 for primes l | n.
    int n = f.degree();
    std::vector<int> prime_divs;
    int m = n;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_divs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_divs.push_back(m);

    const Poly x_mod = poly_divmod(Poly::x(fld), f).second;
    std::vector<Poly> frob; // frob[i] = x^{q^{i+1}} mod f
    Poly h = x_mod;
    for (int i = 0; i < n; ++i) {
        h = poly_powmod(h, fld.order(), f);
        frob.push_back(h);
    }
    if (!(frob[n - 1] - x_mod).is_zero()) return false;
    for (int l : prime_divs) {
        Poly diff = frob[n / l - 1] - x_mod;
        if (diff.is_zero()) return false;
        if (poly_gcd(diff, f).degree() != 0) return false;
    }
    return true;
}

Poly cyclotomic(unsigned d) {
    if (d == 0)
        throw precondition_error("cyclotomic: d must be >= 1");
    Field q = Field::rationals();
    std::vector<FieldElem> cs(d + 1, q.zero());
    cs[0] = q.from_integer(-1);
    cs[d] = q.one();
    Poly num = Poly::from_coeffs(q, std::move(cs)); // x^d - 1
    for (unsigned e = 1; e < d; ++e)
        if (d % e == 0) num = poly_divexact(num, cyclotomic(e));
    return num;
}

Field make_extension_field(std::int64_t p, int k) {
    if (!is_prime_i64(p))
        throw precondition_error("make_extension_field: p must be prime");
    if (k < 1)
        throw precondition_error("make_extension_field: k must be >= 1");
    if (k == 1) return Field::finite(p);
    double size = 1;
    for (int i = 0; i < k; ++i) size *= static_cast<double>(p);
    if (size > 1e7)
        throw capacity_error("make_extension_field: p^k too large for the modulus search");

    // candidates x^k + c_{k-1} x^{k-1} + ... + c_0, enumerated by ascending
    // value of sum c_i p^i (c_0 varies fastest)
    std::vector<std::int64_t> coeffs(k + 1, 0);
    coeffs[k] = 1;
    for (;;) {
        if (detail::fp_irreducible(coeffs, p))
            return Field::finite(p, k, coeffs);
        int i = 0;
        while (i < k && ++coeffs[i] == p) coeffs[i++] = 0;
        if (i == k)
            throw internal_error("make_extension_field: no irreducible candidate found");
    }
}

} // namespace cendiv
