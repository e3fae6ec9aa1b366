#include "cendiv/oracle.hpp"
#include "cendiv/errors.hpp"
#include "cendiv/factor.hpp"

#include <algorithm>

namespace cendiv {

std::int64_t brute_centralizer_dim(const MatrixExact& m) {
    const int n = m.dim();
    if (n > 12)
        throw capacity_error("brute_centralizer_dim: size guard exceeded (n > 12)");
    const Field& f = m.field();
    // K[(i,j),(k,l)] = m[i,k] delta_{j,l} - m[l,j] delta_{i,k}
    MatrixExact k(f, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int row = i * n + j;
            for (int c = 0; c < n; ++c) {
                // X[c,j] picks up m[i,c]
                k.set(row, c * n + j, f.add(k.at(row, c * n + j), m.at(i, c)));
                // X[i,c] picks up -m[c,j]
                k.set(row, i * n + c, f.sub(k.at(row, i * n + c), m.at(c, j)));
            }
        }
    return nullity(k);
}

namespace {

MatrixExact random_invertible(const Field& f, int n, SplitMix64& rng) {
    if (f.is_rationals()) {
        // product of integer transvections and swaps: unimodular, so the
        // conjugated matrix keeps integer entries
        MatrixExact u = MatrixExact::identity(f, n);
        if (n == 1) return u;
        int ops = 2 * n + 4;
        for (int t = 0; t < ops; ++t) {
            int i = static_cast<int>(rng.below(n));
            int j = static_cast<int>(rng.below(n));
            if (i == j) continue;
            std::int64_t c = static_cast<std::int64_t>(rng.below(5)) - 2;
            if (c == 0) {
                for (int col = 0; col < n; ++col) {
                    FieldElem tmp = u.at(i, col);
                    u.set(i, col, u.at(j, col));
                    u.set(j, col, std::move(tmp));
                }
                continue;
            }
            FieldElem ce = f.from_integer(c);
            for (int col = 0; col < n; ++col)
                u.set(i, col, f.add(u.at(i, col), f.mul(ce, u.at(j, col))));
        }
        return u;
    }
    // dense random matrix, re-rolled until invertible
    for (;;) {
        MatrixExact u(f, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                GFVec v(f.extension_degree());
                for (auto& x : v) x = static_cast<std::int64_t>(rng.below(f.p()));
                u.set(i, j, std::move(v));
            }
        if (u.rank() == n) return u;
    }
}

} // namespace

MatrixExact random_similar(const std::vector<DivisorEntry>& divisors, const Field& field,
                           std::uint64_t seed) {
    int total = 0;
    std::vector<MatrixExact> blocks;
    for (const auto& d : divisors) {
        Poly expanded = d.expanded();
        for (int i = 0; i < d.multiplicity; ++i) {
            blocks.push_back(MatrixExact::companion(expanded));
            total += expanded.degree();
        }
    }
    if (total > 12)
        throw capacity_error("random_similar: size guard exceeded (total degree > 12)");
    if (blocks.empty())
        throw precondition_error("random_similar: empty divisor multiset");

    SplitMix64 rng(seed);
    MatrixExact m = MatrixExact::block_diag(blocks);
    MatrixExact u = random_invertible(field, m.dim(), rng);
    return u * m * u.inverse();
}

bool congruence_by_signed_permutation(const std::vector<std::int64_t>& d1,
                                      const std::vector<std::int64_t>& d2) {
    if (d1.size() != d2.size())
        throw precondition_error("congruence_by_signed_permutation: size mismatch");
    const int s = static_cast<int>(d1.size());
    if (s > 6)
        throw capacity_error("congruence_by_signed_permutation: size guard exceeded (s > 6)");

    std::vector<int> perm(s);
    for (int i = 0; i < s; ++i) perm[i] = i;
    do {
        for (unsigned signs = 0; signs < (1u << s); ++signs) {
            // H = eps * P: column j of H has +-1 in row perm[j]
            // (H^tr D1 H)[j][j] = d1[perm[j]] regardless of the sign pattern,
            // but compute the full product anyway - this is the oracle.
            bool match = true;
            for (int i = 0; i < s && match; ++i)
                for (int j = 0; j < s && match; ++j) {
                    std::int64_t acc = 0;
                    for (int k = 0; k < s; ++k) {
                        std::int64_t hki = (perm[i] == k) ? ((signs >> i) & 1 ? -1 : 1) : 0;
                        std::int64_t hkj = (perm[j] == k) ? ((signs >> j) & 1 ? -1 : 1) : 0;
                        acc += hki * d1[k] * hkj;
                    }
                    if (acc != (i == j ? d2[i] : 0)) match = false;
                }
            if (match) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

// X = sum_k (sum_{l<=k} m_k (e_kl + e_lk) - m_k e_kk), the min-matrix.
std::vector<std::vector<std::int64_t>> series_matrix(const std::vector<int>& m) {
    const int s = static_cast<int>(m.size());
    std::vector<std::vector<std::int64_t>> x(s, std::vector<std::int64_t>(s, 0));
    for (int k = 0; k < s; ++k) {
        for (int l = 0; l <= k; ++l) {
            x[k][l] += m[k];
            x[l][k] += m[k];
        }
        x[k][k] -= m[k];
    }
    return x;
}

std::vector<std::int64_t> diagonalize_by_u(const std::vector<std::vector<std::int64_t>>& x,
                                           const std::vector<int>& series) {
    const int s = static_cast<int>(x.size());
    // U = I - sum e_{t+1,t}
    std::vector<std::vector<std::int64_t>> u(s, std::vector<std::int64_t>(s, 0));
    for (int i = 0; i < s; ++i) u[i][i] = 1;
    for (int t = 0; t + 1 < s; ++t) u[t + 1][t] = -1;

    auto mul = [s](const std::vector<std::vector<std::int64_t>>& a,
                   const std::vector<std::vector<std::int64_t>>& b) {
        std::vector<std::vector<std::int64_t>> r(s, std::vector<std::int64_t>(s, 0));
        for (int i = 0; i < s; ++i)
            for (int k = 0; k < s; ++k)
                for (int j = 0; j < s; ++j) r[i][j] += a[i][k] * b[k][j];
        return r;
    };
    std::vector<std::vector<std::int64_t>> ut(s, std::vector<std::int64_t>(s, 0));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) ut[i][j] = u[j][i];
    auto d = mul(mul(ut, x), u);

    std::vector<std::int64_t> diag(s);
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j)
            if (i != j && d[i][j] != 0)
                throw internal_error("series congruence: U-transform did not diagonalize");
        diag[i] = d[i][i];
    }
    // the diagonal must be the difference series (m_1-m_2, ..., m_s)
    for (int i = 0; i < s; ++i) {
        std::int64_t expect = (i + 1 < s) ? series[i] - series[i + 1] : series[s - 1];
        if (diag[i] != expect)
            throw internal_error("series congruence: diagonal is not the difference series");
    }
    return diag;
}

} // namespace

bool series_cartan_congruent(const std::vector<int>& m_series, const std::vector<int>& n_series) {
    if (m_series.size() != n_series.size())
        throw precondition_error("series_cartan_congruent: size mismatch");
    std::vector<std::int64_t> d1 = diagonalize_by_u(series_matrix(m_series), m_series);
    std::vector<std::int64_t> d2 = diagonalize_by_u(series_matrix(n_series), n_series);
    return congruence_by_signed_permutation(d1, d2);
}

std::vector<DivisorEntry> random_divisor_multiset(const Field& field, int max_total_degree,
                                                  SplitMix64& rng) {
    std::vector<DivisorEntry> out;
    int budget = max_total_degree;
    auto random_irreducible = [&](int max_deg) -> Poly {
        if (field.is_rationals()) {
            // draw from a small pool of known irreducibles over Q
            int deg = 1 + static_cast<int>(rng.below(std::min(max_deg, 3)));
            const Field& f = field;
            auto lin = [&](std::int64_t a) {
                return Poly::from_coeffs(f, {f.from_integer(a), f.one()});
            };
            if (deg == 1) {
                std::int64_t c = static_cast<std::int64_t>(rng.below(5)) - 2;
                return lin(c);
            }
            if (deg == 2) {
                switch (rng.below(3)) {
                    case 0: return Poly::from_coeffs(f, {f.one(), f.zero(), f.one()});  // x^2+1
                    case 1: return Poly::from_coeffs(f, {f.from_integer(-2), f.zero(), f.one()});
                    default: return Poly::from_coeffs(f, {f.one(), f.one(), f.one()}); // x^2+x+1
                }
            }
            if (rng.below(2) == 0)
                return Poly::from_coeffs(f, {f.from_integer(-2), f.zero(), f.zero(), f.one()});
            return Poly::from_coeffs(f, {f.one(), f.one(), f.zero(), f.one()}); // x^3+x+1
        }
        for (;;) {
            int deg = 1 + static_cast<int>(rng.below(std::min(max_deg, 3)));
            std::vector<FieldElem> cs;
            for (int i = 0; i < deg; ++i) {
                GFVec v(field.extension_degree());
                for (auto& c : v) c = static_cast<std::int64_t>(rng.below(field.p()));
                cs.push_back(std::move(v));
            }
            cs.push_back(field.one());
            Poly cand = Poly::from_coeffs(field, std::move(cs));
            if (is_irreducible(cand)) return cand;
        }
    };

    while (budget > 0) {
        Poly base = random_irreducible(budget);
        int max_exp = budget / base.degree();
        if (max_exp == 0) break;
        int exp = 1 + static_cast<int>(rng.below(std::min(max_exp, 4)));
        out.push_back(DivisorEntry{base, exp, 1});
        budget -= exp * base.degree();
        if (rng.below(4) == 0) break; // sometimes stop early
    }
    if (out.empty())
        out.push_back(DivisorEntry{Poly::x(field), 1, 1});
    return out;
}

std::vector<SelftestRow> run_selftest_corpus(int count) {
    std::vector<SelftestRow> rows;
    rows.reserve(count);
    for (int i = 0; i < count; ++i) {
        Field field = (i % 3 == 0)   ? Field::rationals()
                      : (i % 3 == 1) ? Field::finite(2)
                                     : Field::finite(5);
        std::uint64_t seed = 0x5EEDULL * 1000003ULL + static_cast<std::uint64_t>(i);
        SplitMix64 rng(seed);
        std::vector<DivisorEntry> divisors = random_divisor_multiset(field, 10, rng);

        SelftestRow row;
        row.seed = seed;
        row.field = field.name();
        for (const auto& d : divisors) row.total_degree += d.exponent * d.base.degree() * d.multiplicity;

        MatrixExact m = random_similar(divisors, field, seed ^ 0x9E3779B97F4A7C15ULL);
        DivisorProfile want = DivisorProfile::from_divisors(field, divisors);
        DivisorProfile got = profile(m);

        row.roundtrip_ok = want.divisors.size() == got.divisors.size();
        if (row.roundtrip_ok)
            for (std::size_t j = 0; j < want.divisors.size(); ++j) {
                const auto& a = want.divisors[j];
                const auto& b = got.divisors[j];
                if (!(a.base == b.base) || a.exponent != b.exponent ||
                    a.multiplicity != b.multiplicity) {
                    row.roundtrip_ok = false;
                    break;
                }
            }

        row.dim_profile = centralizer_dim(got);
        row.dim_brute = brute_centralizer_dim(m);
        row.dim_ok = row.dim_profile == row.dim_brute;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace cendiv
