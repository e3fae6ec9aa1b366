#include "cendiv/equivalence.hpp"
#include "cendiv/errors.hpp"
#include "cendiv/isoclass.hpp"

#include <algorithm>

namespace cendiv {

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::M: return "M";
        case Relation::D: return "D";
        case Relation::AD: return "AD";
        case Relation::SM: return "SM";
    }
    return "?";
}

const char* relation_long_name(Relation r) {
    switch (r) {
        case Relation::M: return "Morita";
        case Relation::D: return "derived";
        case Relation::AD: return "almost nu-stable derived";
        case Relation::SM: return "stable-of-Morita-type";
    }
    return "?";
}

std::optional<Relation> relation_from_string(const std::string& s) {
    if (s == "morita" || s == "M" || s == "m") return Relation::M;
    if (s == "derived" || s == "D" || s == "d") return Relation::D;
    if (s == "ad" || s == "AD") return Relation::AD;
    if (s == "sm" || s == "SM") return Relation::SM;
    return std::nullopt;
}

const char* pair_mode_name(PairMode m) {
    return m == PairMode::P_eq_P ? "P=P" : "P=J(P)";
}

namespace {

const char* theorem_label(Relation r) {
    switch (r) {
        case Relation::M: return "Theorem 1.2(1)";
        case Relation::D: return "Theorem 1.2(2)";
        case Relation::AD: return "Theorem 1.2(3)";
        case Relation::SM: return "Theorem 1.2(4)";
    }
    return "";
}

std::string theorem_gloss(Relation r) {
    switch (r) {
        case Relation::M:
            return "the principal centralizer algebras are Morita equivalent if and only if "
                   "this relation holds";
        case Relation::D:
            return "the principal centralizer algebras are derived equivalent if and only if "
                   "this relation holds";
        case Relation::AD:
            return "the principal centralizer algebras are almost nu-stable derived equivalent "
                   "if and only if this relation holds";
        case Relation::SM:
            return "the principal centralizer algebras are stably equivalent of Morita type "
                   "if and only if this relation holds";
    }
    return "";
}

std::vector<std::string> theorem_hypotheses(Relation r) {
    std::vector<std::string> h = {"R is a field"};
    if (r == Relation::SM)
        h.push_back("either R is perfect or both c and d are invertible matrices of finite "
                    "order; Q and all finite fields are perfect, so the hypothesis holds here");
    return h;
}

// Maximum bipartite matching by augmenting paths (tiny sides, so the O(V*E)
// scan is plenty).
struct Matcher {
    std::vector<std::vector<int>> adj;
    std::vector<int> match_left, match_right;
    std::vector<char> visited;

    explicit Matcher(int nl, int nr)
        : adj(nl), match_left(nl, -1), match_right(nr, -1), visited(nr, 0) {}

    bool augment(int v) {
        for (int u : adj[v]) {
            if (visited[u]) continue;
            visited[u] = 1;
            if (match_right[u] == -1 || augment(match_right[u])) {
                match_left[v] = u;
                match_right[u] = v;
                return true;
            }
        }
        return false;
    }

    int solve() {
        int size = 0;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
            std::fill(visited.begin(), visited.end(), 0);
            if (augment(v)) ++size;
        }
        return size;
    }
};

std::vector<const MaximalBlock*> relation_domain(Relation rel, const DivisorProfile& p) {
    std::vector<const MaximalBlock*> out;
    for (const auto& blk : p.blocks)
        if (rel != Relation::SM || blk.reducible) out.push_back(&blk);
    return out;
}

} // namespace

std::pair<bool, PairMode> pair_admissible(Relation rel, const MaximalBlock& left,
                                          const MaximalBlock& right) {
    require_same_field(left.base.field(), right.base.field(), "pair_admissible");
    if (!prime_power_iso(left.base, left.exponent, right.base, right.exponent))
        return {false, PairMode::P_eq_P};
    switch (rel) {
        case Relation::M:
            return {left.pset == right.pset, PairMode::P_eq_P};
        case Relation::D:
            return {h_multiset(left.pset) == h_multiset(right.pset), PairMode::P_eq_P};
        case Relation::AD:
        case Relation::SM:
            if (left.pset == right.pset) return {true, PairMode::P_eq_P};
            if (left.pset == j_set(right.pset)) return {true, PairMode::P_eq_JP};
            return {false, PairMode::P_eq_P};
    }
    return {false, PairMode::P_eq_P};
}

EquivalenceVerdict decide(Relation rel, const DivisorProfile& a, const DivisorProfile& b) {
    require_same_field(a.field, b.field, "decide");

    EquivalenceVerdict v;
    v.relation = rel;
    v.theorem = theorem_label(rel);
    v.gloss = theorem_gloss(rel);
    v.hypotheses = theorem_hypotheses(rel);

    std::vector<const MaximalBlock*> left = relation_domain(rel, a);
    std::vector<const MaximalBlock*> right = relation_domain(rel, b);
    v.left_size = static_cast<int>(left.size());
    v.right_size = static_cast<int>(right.size());

    if (left.size() != right.size()) {
        v.equivalent = false;
        v.refusal = RefusalKind::size_mismatch;
        return v;
    }

    Matcher matcher(static_cast<int>(left.size()), static_cast<int>(right.size()));
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            if (pair_admissible(rel, *left[i], *right[j]).first)
                matcher.adj[i].push_back(static_cast<int>(j));

    if (matcher.solve() != static_cast<int>(left.size())) {
        v.equivalent = false;
        v.refusal = RefusalKind::no_perfect_matching;
        return v;
    }

    v.equivalent = true;
    for (std::size_t i = 0; i < left.size(); ++i) {
        const MaximalBlock& l = *left[i];
        const MaximalBlock& r = *right[matcher.match_left[i]];
        auto [ok, mode] = pair_admissible(rel, l, r);
        if (!ok)
            throw internal_error("decide: matching produced an inadmissible pair");
        v.witness.push_back(WitnessPair{l.divisor_string(), r.divisor_string(), mode});
    }
    return v;
}

std::vector<EquivalenceVerdict> decide_all(const DivisorProfile& a, const DivisorProfile& b) {
    std::vector<EquivalenceVerdict> out;
    for (Relation rel : {Relation::M, Relation::D, Relation::AD, Relation::SM})
        out.push_back(decide(rel, a, b));

    const bool m = out[0].equivalent, d = out[1].equivalent, ad = out[2].equivalent,
               sm = out[3].equivalent;
    // M => AD => D and AD => SM; a violation is an arithmetic bug
    if ((m && !ad) || (ad && !d) || (ad && !sm))
        throw internal_error("decide_all: implication chain violated");

    if (a.permutation_origin && b.permutation_origin) {
        std::string note = "both profiles come from permutation matrices: Morita and derived "
                           "equivalence coincide for these algebras (Corollary 1.3(1))";
        out[0].note = note;
        out[1].note = note;
    }
    return out;
}

} // namespace cendiv
