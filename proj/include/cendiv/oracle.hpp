#pragma once

#include <string>

#include "cendiv/divisor.hpp"

namespace cendiv {

// dim of the commutant by direct linear algebra: nullity of the n^2 x n^2
// matrix of X -> mX - Xm. Deliberately naive; guarded to n <= 12.
std::int64_t brute_centralizer_dim(const MatrixExact& m);

// A matrix whose elementary divisors are exactly the given multiset, built
// from companion blocks of the prime powers and conjugated by a seeded random
// invertible matrix (unimodular over Q so entries stay integral). The total
// degree is guarded to <= 12 for oracle use. Deterministic per seed, driven
// by the splitmix64 recurrence documented in numeric.hpp.
MatrixExact random_similar(const std::vector<DivisorEntry>& divisors, const Field& field,
                           std::uint64_t seed);

// Exhaustive search for a signed permutation H with H^tr D1 H = D2
// (diagonal integer matrices, size <= 6).
bool congruence_by_signed_permutation(const std::vector<std::int64_t>& d1,
                                      const std::vector<std::int64_t>& d2);

// The full congruence route for two strictly decreasing series: build the
// min-matrices from the displayed double sum, diagonalize with
// U = I - sum e_{t+1,t} (verifying the diagonal equals the difference
// series), then run the signed-permutation search on the diagonals.
// Equivalent to h_multiset equality; the equivalence is what tests check.
bool series_cartan_congruent(const std::vector<int>& m_series, const std::vector<int>& n_series);

struct SelftestRow {
    std::uint64_t seed = 0;
    std::string field;
    int total_degree = 0;
    bool roundtrip_ok = false;
    bool dim_ok = false;
    std::int64_t dim_profile = 0;
    std::int64_t dim_brute = 0;
    bool ok() const { return roundtrip_ok && dim_ok; }
};

// The seeded oracle corpus: `count` random divisor multisets of total degree
// <= 10 over F_2, F_5 and Q; construct-then-recover round trip plus
// centralizer-dimension agreement.
std::vector<SelftestRow> run_selftest_corpus(int count);

// The random divisor multiset the corpus uses for one seed (exposed so tests
// can reuse the generator).
std::vector<DivisorEntry> random_divisor_multiset(const Field& field, int max_total_degree,
                                                  SplitMix64& rng);

} // namespace cendiv
