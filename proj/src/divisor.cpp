#include "cendiv/divisor.hpp"
#include "cendiv/errors.hpp"
#include "cendiv/factor.hpp"

#include <algorithm>
#include <map>

namespace cendiv {

std::string MaximalBlock::divisor_string() const {
    std::string b = base.to_string();
    if (exponent == 1) return b;
    bool needs_parens = b.find(' ') != std::string::npos || b.find('+') != std::string::npos ||
                        b.find('-') != std::string::npos;
    return (needs_parens ? "(" + b + ")" : b) + "^" + std::to_string(exponent);
}

DivisorProfile DivisorProfile::from_divisors(const Field& f, std::vector<DivisorEntry> divisors) {
    if (divisors.empty())
        throw precondition_error("profile requires at least one elementary divisor");

    // merge duplicates of the same (base, exponent)
    std::map<std::string, DivisorEntry> merged;
    for (auto& d : divisors) {
        if (d.exponent < 1 || d.multiplicity < 1)
            throw precondition_error("elementary divisor with nonpositive exponent or multiplicity");
        if (!d.base.is_monic() || d.base.degree() < 1)
            throw precondition_error("elementary divisor base must be monic of degree >= 1");
        require_same_field(f, d.base.field(), "profile divisors");
        std::string key = d.base.to_string() + "^" + std::to_string(d.exponent);
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(key, std::move(d));
        else
            it->second.multiplicity += d.multiplicity;
    }

    DivisorProfile prof{f, 0, {}, {}, false};
    for (auto& [key, d] : merged) {
        prof.n += d.exponent * d.base.degree() * d.multiplicity;
        prof.divisors.push_back(std::move(d));
    }
    std::sort(prof.divisors.begin(), prof.divisors.end(),
              [](const DivisorEntry& a, const DivisorEntry& b) {
                  return poly_cmp(a.expanded(), b.expanded()) < 0;
              });

    // one block per base; pset = exponents of that base, strictly decreasing
    std::map<std::string, MaximalBlock> by_base;
    for (const auto& d : prof.divisors) {
        std::string key = d.base.to_string();
        auto it = by_base.find(key);
        if (it == by_base.end())
            by_base.emplace(key, MaximalBlock{d.base, 0, {d.exponent}, false});
        else
            it->second.pset.push_back(d.exponent);
    }
    for (auto& [key, blk] : by_base) {
        std::sort(blk.pset.begin(), blk.pset.end(), std::greater<int>());
        blk.pset.erase(std::unique(blk.pset.begin(), blk.pset.end()), blk.pset.end());
        blk.exponent = blk.pset.front();
        blk.reducible = blk.exponent >= 2;
        prof.blocks.push_back(std::move(blk));
    }
    std::sort(prof.blocks.begin(), prof.blocks.end(),
              [](const MaximalBlock& a, const MaximalBlock& b) {
                  return poly_cmp(a.divisor(), b.divisor()) < 0;
              });
    return prof;
}

std::vector<DivisorEntry> elementary_divisors(const MatrixExact& m) {
    const int n = m.dim();
    Poly cp = char_poly(m);
    Factorization fac = factor(cp);

    std::vector<DivisorEntry> out;
    int total = 0;
    for (const auto& [base, cp_mult] : fac.factors) {
        const int deg = base.degree();
        MatrixExact b = eval_poly_at_matrix(base, m);
        // N_k = nullity(b^k); stop once the sequence stabilizes
        std::vector<int> nullities = {0};
        MatrixExact pw = b;
        for (int k = 1; k <= n + 1; ++k) {
            nullities.push_back(nullity(pw));
            if (nullities[k] == nullities[k - 1]) break;
            pw = pw * b;
        }
        const int kmax = static_cast<int>(nullities.size()) - 1;
        auto at = [&](int k) { return k <= kmax ? nullities[k] : nullities[kmax]; };
        int exponent_sum = 0;
        for (int k = 1; k <= kmax; ++k) {
            int raw = 2 * at(k) - at(k - 1) - at(k + 1);
            if (raw < 0 || raw % deg != 0)
                throw internal_error("elementary_divisors: non-integer multiplicity for base " +
                                     base.to_string());
            int mult = raw / deg;
            if (mult > 0) {
                out.push_back(DivisorEntry{base, k, mult});
                exponent_sum += k * mult;
                total += k * mult * deg;
            }
        }
        if (exponent_sum != cp_mult)
            throw internal_error("elementary_divisors: multiplicities disagree with char_poly for base " +
                                 base.to_string());
    }
    if (total != n)
        throw internal_error("elementary_divisors: dimension identity violated");
    std::sort(out.begin(), out.end(), [](const DivisorEntry& a, const DivisorEntry& b) {
        return poly_cmp(a.expanded(), b.expanded()) < 0;
    });
    return out;
}

DivisorProfile profile(const MatrixExact& m) {
    return DivisorProfile::from_divisors(m.field(), elementary_divisors(m));
}

namespace {
void require_strictly_decreasing(const std::vector<int>& t, const char* what) {
    if (t.empty())
        throw precondition_error(std::string(what) + ": empty set");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 1)
            throw precondition_error(std::string(what) + ": entries must be positive");
        if (i + 1 < t.size() && t[i] <= t[i + 1])
            throw precondition_error(std::string(what) + ": entries must be strictly decreasing");
    }
}
} // namespace

std::vector<int> h_multiset(const std::vector<int>& t) {
    require_strictly_decreasing(t, "h_multiset");
    std::vector<int> out;
    out.reserve(t.size());
    for (std::size_t i = 0; i + 1 < t.size(); ++i) out.push_back(t[i] - t[i + 1]);
    out.push_back(t.back());
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

std::vector<int> j_set(const std::vector<int>& t) {
    require_strictly_decreasing(t, "j_set");
    std::vector<int> out = {t[0]};
    for (std::size_t i = 1; i < t.size(); ++i) out.push_back(t[0] - t[i]);
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

std::int64_t centralizer_dim(const DivisorProfile& p) {
    // dim Hom(R[x]/(q_i), R[x]/(q_j)) = deg gcd(q_i, q_j), summed over ordered pairs
    std::int64_t dim = 0;
    for (const auto& a : p.divisors) {
        Poly ea = a.expanded();
        for (const auto& b : p.divisors) {
            int d = poly_gcd(ea, b.expanded()).degree();
            dim += static_cast<std::int64_t>(d) * a.multiplicity * b.multiplicity;
        }
    }
    return dim;
}

bool is_principal_cyclic(const DivisorProfile& p) {
    if (p.divisors.size() != p.blocks.size()) return false;
    for (const auto& d : p.divisors)
        if (d.multiplicity != 1) return false;
    return true;
}

std::vector<int> jordan_profile_nilpotent(const MatrixExact& m) {
    const int n = m.dim();
    std::vector<int> ranks = {n};
    MatrixExact pw = m;
    int k = 1;
    for (;; ++k) {
        int r = pw.rank();
        ranks.push_back(r);
        if (r == 0) break;
        if (k > n)
            throw precondition_error("jordan_profile_nilpotent: matrix is not nilpotent");
        pw = pw * m;
    }
    auto at = [&](int i) {
        return i < static_cast<int>(ranks.size()) ? ranks[i] : 0;
    };
    std::vector<int> sizes;
    for (int t = 1; t <= k; ++t)
        if (at(t + 1) + at(t - 1) - 2 * at(t) > 0) sizes.push_back(t);
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return sizes;
}

} // namespace cendiv
