#pragma once

#include <vector>

#include "cendiv/matrix.hpp"

namespace cendiv {

// One distinct elementary divisor base^exponent with its multiplicity in the
// decomposition of R^n.
struct DivisorEntry {
    Poly base;        // monic irreducible
    int exponent;     // >= 1
    int multiplicity; // >= 1
    Poly expanded() const { return base.pow(exponent); }
};

// A maximal divisor base^exponent together with the power indices of its base.
struct MaximalBlock {
    Poly base;
    int exponent;          // n_i = max of pset
    std::vector<int> pset; // strictly decreasing, pset[0] == exponent
    bool reducible;        // exponent >= 2, i.e. pset != {1}
    Poly divisor() const { return base.pow(exponent); }
    // "x^3", "(x - 1)^4": unexpanded form used in witnesses and reports.
    std::string divisor_string() const;
};

// The complete similarity invariant of a matrix: the elementary-divisor
// multiset and the per-base maximal blocks derived from it.
struct DivisorProfile {
    Field field;
    int n = 0; // sum of exponent * deg(base) over the multiset
    std::vector<DivisorEntry> divisors; // canonical order
    std::vector<MaximalBlock> blocks;   // canonical order on the maximal divisors
    bool permutation_origin = false;    // set by the cycle-type path

    static DivisorProfile from_divisors(const Field& f, std::vector<DivisorEntry> divisors);
};

// Elementary divisors by the nullity-sequence method: factor the
// characteristic polynomial; for each irreducible base p of degree d the
// multiplicity of p^k is (2*N_k - N_{k-1} - N_{k+1}) / d with
// N_k = nullity(p(m)^k). Powers are built incrementally.
std::vector<DivisorEntry> elementary_divisors(const MatrixExact& m);

DivisorProfile profile(const MatrixExact& m);

// H_T: the multiset of consecutive differences of T followed by min(T);
// T strictly decreasing. Returned sorted descending (canonical multiset form).
std::vector<int> h_multiset(const std::vector<int>& t);

// J_T = {m_1} union {m_1 - m_i : i >= 2}; an involution on strictly
// decreasing sets. Returned strictly decreasing.
std::vector<int> j_set(const std::vector<int>& t);

// dim_R of the centralizer algebra: sum over ordered pairs of divisors
// (with multiplicity) of deg gcd.
std::int64_t centralizer_dim(const DivisorProfile& p);

// True iff the centralizer equals R[c], i.e. the minimal and characteristic
// polynomials agree: exactly one divisor per base, each with multiplicity 1.
bool is_principal_cyclic(const DivisorProfile& p);

// Jordan block sizes of a nilpotent matrix from ranks alone:
// t is a block size iff rank(m^{t+1}) + rank(m^{t-1}) - 2 rank(m^t) > 0.
// Independent of the factorization path; must agree with the profile's pset.
std::vector<int> jordan_profile_nilpotent(const MatrixExact& m);

} // namespace cendiv
