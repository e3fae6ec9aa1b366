#pragma once

#include "cendiv/divisor.hpp"

namespace cendiv {

// Decide R[x]/(p1) ~ R[x]/(p2) as algebras, for monic irreducible p1, p2 over
// the same field. Over F_q this is degree equality (uniqueness of F_{q^d}).
// Over Q: degree equality plus root existence, decided by the Trager norm
// method — find a shift s with N(x) = Res_t(p2(t), p1(x - s t)) squarefree;
// p1 has a root in Q[x]/(p2) iff N has an irreducible factor of degree deg p1.
// Negative pre-filters (discriminant sign, mod-p factorization shapes) run
// first; the norm method is the decision procedure of record.
bool residue_iso(const Poly& p1, const Poly& p2);

// R[x]/(p1^a) ~ R[x]/(p2^b) over a perfect field: a == b and residue fields
// isomorphic.
bool prime_power_iso(const DivisorEntry& d1, const DivisorEntry& d2);
bool prime_power_iso(const Poly& base1, int exp1, const Poly& base2, int exp2);

} // namespace cendiv
