#include <doctest.h>

#include <algorithm>

#include "cendiv/factor.hpp"
#include "cendiv/equivalence.hpp"
#include "cendiv/errors.hpp"
#include "cendiv/permutation.hpp"
#include "cendiv/poly_io.hpp"
#include "helpers.hpp"

using namespace cendiv;
using cendiv::testing::jordan;

namespace {

// single-base profile from a pset over the given field
DivisorProfile nilprofile(const Field& f, const std::string& base, const std::vector<int>& pset) {
    std::vector<DivisorEntry> divs;
    for (int t : pset) divs.push_back(DivisorEntry{parse_poly(f, base), t, 1});
    return DivisorProfile::from_divisors(f, std::move(divs));
}

DivisorProfile pool_profile(const Field& f, SplitMix64& rng) {
    static const char* bases[] = {"x", "x - 1", "x + 1", "x - 2", "x + 2"};
    std::vector<DivisorEntry> divs;
    int blocks = 1 + static_cast<int>(rng.below(3));
    for (int b = 0; b < blocks; ++b) {
        const char* base = bases[rng.below(5)];
        int count = 1 + static_cast<int>(rng.below(3));
        std::vector<int> exps;
        for (int i = 0; i < count; ++i) {
            int e = 1 + static_cast<int>(rng.below(8));
            if (std::find(exps.begin(), exps.end(), e) == exps.end()) exps.push_back(e);
        }
        for (int e : exps) divs.push_back(DivisorEntry{parse_poly(f, base), e, 1});
    }
    return DivisorProfile::from_divisors(f, std::move(divs));
}

MaximalBlock make_block(const Field& f, const std::string& base, std::vector<int> pset) {
    std::sort(pset.begin(), pset.end(), std::greater<int>());
    return MaximalBlock{parse_poly(f, base), pset.front(), pset, pset.front() >= 2};
}

} // namespace

TEST_CASE("pair_admissible") {
    Field q = Field::rationals();
    MaximalBlock a = make_block(q, "x", {3, 2});
    MaximalBlock b = make_block(q, "x - 1", {3, 2});
    CHECK(pair_admissible(Relation::M, a, b).first);

    MaximalBlock c = make_block(q, "x", {5, 4, 2});
    MaximalBlock d = make_block(q, "x", {5, 3, 1});
    auto [ok, mode] = pair_admissible(Relation::AD, c, d);
    CHECK(ok);
    CHECK(mode == PairMode::P_eq_JP);
    CHECK(!pair_admissible(Relation::M, c, d).first);
    CHECK(pair_admissible(Relation::D, c, d).first);
}

TEST_CASE("decide: nilpotent example pairs") {
    Field q = Field::rationals();

    // J5+J4+J2 (11x11) vs J5+J3+J1 (9x9)
    DivisorProfile a = nilprofile(q, "x", {5, 4, 2});
    DivisorProfile b = nilprofile(q, "x", {5, 3, 1});
    auto all = decide_all(a, b);
    CHECK(!all[0].equivalent); // M
    CHECK(all[1].equivalent);  // D
    CHECK(all[2].equivalent);  // AD
    CHECK(all[3].equivalent);  // SM
    REQUIRE(all[2].witness.size() == 1);
    CHECK(all[2].witness[0].mode == PairMode::P_eq_JP);
    CHECK(all[2].witness[0].left == "x^5");
    CHECK(all[0].refusal == RefusalKind::no_perfect_matching);

    // J5+J4+J1 (10x10) vs J5+J2+J1 (8x8): D holds, AD fails - over any field
    for (const Field& f : {Field::rationals(), Field::finite(3)}) {
        DivisorProfile c = nilprofile(f, "x", {5, 4, 1});
        DivisorProfile d = nilprofile(f, "x", {5, 2, 1});
        CHECK(decide(Relation::D, c, d).equivalent);
        CHECK(!decide(Relation::AD, c, d).equivalent);
    }
}

TEST_CASE("nilpotent vs scalar-shifted nilpotent through the full pipeline") {
    // c nilpotent with block sizes {3,2}; d = 7*I + b with b of block sizes
    // {3,1}. The difference multisets agree ({1,2} both), so the algebras are
    // derived equivalent even though the P-sets differ.
    Field q = Field::rationals();
    MatrixExact c = MatrixExact::block_diag({jordan(q, 3, 0), jordan(q, 2, 0)});
    MatrixExact d = MatrixExact::block_diag({jordan(q, 3, 7), jordan(q, 1, 7)});

    CHECK(jordan_profile_nilpotent(c) == std::vector<int>{3, 2});
    DivisorProfile pc = profile(c), pd = profile(d);
    REQUIRE(pd.blocks.size() == 1);
    CHECK(pd.blocks[0].base == parse_poly(q, "x - 7"));
    CHECK(pd.blocks[0].pset == std::vector<int>{3, 1});
    CHECK(h_multiset(pc.blocks[0].pset) == h_multiset(pd.blocks[0].pset));

    CHECK(decide(Relation::D, pc, pd).equivalent);
    CHECK(!decide(Relation::M, pc, pd).equivalent);

    // shifting by a different scalar changes nothing: J profiles are computed
    // from the nilpotent part alone
    MatrixExact b = MatrixExact::block_diag({jordan(q, 3, 0), jordan(q, 1, 0)});
    CHECK(jordan_profile_nilpotent(b) == pd.blocks[0].pset);
}

TEST_CASE("semisimple profiles are SM-equivalent vacuously") {
    // no reducible maximal divisors on either side: the bijection over the
    // empty domain exists, matching the separability of semisimple blocks
    Field q = Field::rationals();
    DivisorProfile id2 = profile(MatrixExact::identity(q, 2));
    std::vector<DivisorEntry> diag = {{parse_poly(q, "x - 1"), 1, 1},
                                      {parse_poly(q, "x - 2"), 1, 1}};
    DivisorProfile d12 = DivisorProfile::from_divisors(q, diag);
    EquivalenceVerdict sm = decide(Relation::SM, id2, d12);
    CHECK(sm.equivalent);
    CHECK(sm.witness.empty());
    CHECK(!decide(Relation::M, id2, d12).equivalent); // block counts differ
    // matrix algebras of different sizes over the same field stay Morita
    // equivalent: identity 2x2 vs identity 3x3
    DivisorProfile id3 = profile(MatrixExact::identity(q, 3));
    CHECK(decide(Relation::M, id2, id3).equivalent);
}

TEST_CASE("decide: cyclotomic profiles from cycle types") {
    Field q = Field::rationals();
    DivisorProfile a = cycle_type_profile(CycleType::of({5, 13}), q);
    DivisorProfile b = cycle_type_profile(CycleType::of({7, 11}), q);
    EquivalenceVerdict v = decide(Relation::M, a, b);
    CHECK(!v.equivalent);
    CHECK(v.refusal == RefusalKind::no_perfect_matching);
    CHECK(v.left_size == 3);
    CHECK(v.right_size == 3);

    // a profile is equivalent to itself under every relation, with the
    // identity witness
    for (Relation rel : {Relation::M, Relation::D, Relation::AD, Relation::SM}) {
        EquivalenceVerdict self = decide(rel, a, a);
        CHECK(self.equivalent);
        for (const auto& w : self.witness) CHECK(w.left == w.right);
    }
}

TEST_CASE("decide_all: the 12x12 Morita pair") {
    Field q = Field::rationals();
    std::vector<DivisorEntry> left = {{parse_poly(q, "x"), 2, 1},
                                      {parse_poly(q, "x"), 3, 1},
                                      {parse_poly(q, "x - 1"), 3, 1},
                                      {parse_poly(q, "x - 1"), 4, 1}};
    std::vector<DivisorEntry> right = {{parse_poly(q, "x"), 3, 1},
                                       {parse_poly(q, "x"), 4, 1},
                                       {parse_poly(q, "x - 1"), 2, 1},
                                       {parse_poly(q, "x - 1"), 3, 1}};
    DivisorProfile a = DivisorProfile::from_divisors(q, left);
    DivisorProfile b = DivisorProfile::from_divisors(q, right);
    EquivalenceVerdict m = decide(Relation::M, a, b);
    CHECK(m.equivalent);
    REQUIRE(m.witness.size() == 2);
    CHECK(m.witness[0].left == "x^3");
    CHECK(m.witness[0].right == "(x - 1)^3");
    CHECK(m.witness[1].left == "(x - 1)^4");
    CHECK(m.witness[1].right == "x^4");
    for (const auto& v : decide_all(a, b)) CHECK(v.equivalent);
}

TEST_CASE("decide_all: F_25 cycle-type pair has a size mismatch") {
    Field f25 = make_extension_field(5, 2);
    DivisorProfile a = cycle_type_profile(CycleType::of({15, 4}), f25);
    DivisorProfile b = cycle_type_profile(CycleType::of({15, 3, 2}), f25);
    CHECK(a.blocks.size() == 6);
    CHECK(b.blocks.size() == 4);
    EquivalenceVerdict d = decide(Relation::D, a, b);
    CHECK(!d.equivalent);
    CHECK(d.refusal == RefusalKind::size_mismatch);
    CHECK(d.left_size == 6);
    CHECK(d.right_size == 4);
}

TEST_CASE("symmetry and the implication chain on random profiles") {
    SplitMix64 rng(99991);
    int d_not_ad = 0;
    for (int iter = 0; iter < 150; ++iter) {
        Field f = (iter % 2 == 0) ? Field::rationals() : Field::finite(5);
        auto make_pair = [&]() -> std::pair<DivisorProfile, DivisorProfile> {
            DivisorProfile first = pool_profile(f, rng);
            if (iter % 3 != 0) return {first, pool_profile(f, rng)};
            // h-preserving rearrangement: accumulate a shuffled difference
            // multiset, so D holds by construction and AD often fails
            const MaximalBlock& blk = first.blocks[rng.below(first.blocks.size())];
            std::vector<int> diffs = h_multiset(blk.pset);
            for (std::size_t i = diffs.size(); i > 1; --i)
                std::swap(diffs[i - 1], diffs[rng.below(i)]);
            std::vector<int> pset;
            int acc = 0;
            for (auto it = diffs.rbegin(); it != diffs.rend(); ++it) {
                acc += *it;
                pset.push_back(acc);
            }
            std::vector<DivisorEntry> left, right;
            for (int t : blk.pset) left.push_back(DivisorEntry{blk.base, t, 1});
            for (int t : pset) right.push_back(DivisorEntry{blk.base, t, 1});
            return {DivisorProfile::from_divisors(f, left),
                    DivisorProfile::from_divisors(f, right)};
        };
        auto [a, b] = make_pair();

        bool m = decide(Relation::M, a, b).equivalent;
        bool d = decide(Relation::D, a, b).equivalent;
        bool ad = decide(Relation::AD, a, b).equivalent;
        bool sm = decide(Relation::SM, a, b).equivalent;

        // symmetry
        CHECK(decide(Relation::M, b, a).equivalent == m);
        CHECK(decide(Relation::D, b, a).equivalent == d);
        CHECK(decide(Relation::AD, b, a).equivalent == ad);
        CHECK(decide(Relation::SM, b, a).equivalent == sm);

        // chain: M => AD => D, AD => SM, M => SM
        if (m) CHECK(ad);
        if (ad) CHECK(d);
        if (ad) CHECK(sm);
        if (m) CHECK(sm);
        if (d && !ad) ++d_not_ad;
    }
    // D must not collapse into AD on this corpus
    CHECK(d_not_ad > 0);
}

TEST_CASE("SM ignores non-reducible blocks") {
    Field q = Field::rationals();
    SplitMix64 rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        DivisorProfile a = pool_profile(q, rng);
        DivisorProfile b = pool_profile(q, rng);
        bool sm = decide(Relation::SM, a, b).equivalent;

        // pad either side with fresh semisimple blocks (P = {1})
        auto pad = [&](const DivisorProfile& p, int start, int count) {
            std::vector<DivisorEntry> divs = p.divisors;
            for (int i = 0; i < count; ++i) {
                std::string base = "x - " + std::to_string(100 + start + i);
                divs.push_back(DivisorEntry{parse_poly(q, base), 1, 1});
            }
            return DivisorProfile::from_divisors(q, divs);
        };
        DivisorProfile a_pad = pad(a, 0, 1 + static_cast<int>(rng.below(3)));
        DivisorProfile b_pad = pad(b, 10, 1 + static_cast<int>(rng.below(3)));
        CHECK(decide(Relation::SM, a_pad, b).equivalent == sm);
        CHECK(decide(Relation::SM, a, b_pad).equivalent == sm);
        CHECK(decide(Relation::SM, a_pad, b_pad).equivalent == sm);
    }
}

TEST_CASE("field mismatch is rejected") {
    DivisorProfile a = nilprofile(Field::rationals(), "x", {2});
    DivisorProfile b = nilprofile(Field::finite(5), "x", {2});
    CHECK_THROWS_AS(decide(Relation::M, a, b), field_mismatch_error);
}

TEST_CASE("permutation profiles: Morita iff derived") {
    SplitMix64 rng(5150);
    for (int iter = 0; iter < 40; ++iter) {
        std::int64_t p = std::vector<std::int64_t>{2, 3, 5}[iter % 3];
        Field f = Field::finite(p);
        auto random_type = [&] {
            std::vector<std::int64_t> parts;
            int k = 1 + static_cast<int>(rng.below(3));
            for (int i = 0; i < k; ++i) parts.push_back(1 + static_cast<std::int64_t>(rng.below(30)));
            return CycleType::of(std::move(parts));
        };
        DivisorProfile a = cycle_type_profile(random_type(), f);
        DivisorProfile b = cycle_type_profile(random_type(), f);
        auto all = decide_all(a, b);
        CHECK(all[0].equivalent == all[1].equivalent);
        if (all[0].equivalent) CHECK(!all[0].note.empty());
    }
}
