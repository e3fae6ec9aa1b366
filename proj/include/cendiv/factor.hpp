#pragma once

#include <utility>
#include <vector>

#include "cendiv/poly.hpp"

namespace cendiv {

// Complete factorization f = unit * prod base_i^exp_i with monic irreducible
// pairwise-distinct bases in canonical order.
struct Factorization {
    FieldElem unit;
    std::vector<std::pair<Poly, int>> factors;

    Poly reassemble(const Field& f) const;
};

// f = prod g_i^{m_i} with g_i squarefree, monic, pairwise coprime and m_1 < m_2 < ...
// Requires f nonzero and monic. Yun's algorithm over Q; over F_q the same pass
// plus p-th-power peeling of the remaining p-multiple part.
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& f);

// Complete irreducible factorization. Over F_q: distinct-degree splitting then
// equal-degree (Cantor-Zassenhaus) splitting, seeded deterministically from a
// content hash of f. Over Q: squarefree part, factor mod a good prime, Hensel
// lift to the Mignotte bound, subset recombination. Rejects constants.
Factorization factor(const Poly& f);

// Rabin's test over F_q; over Q, factor() with a single-factor check.
bool is_irreducible(const Poly& f);

// d-th cyclotomic polynomial over Q (monic, degree phi(d)).
Poly cyclotomic(unsigned d);

// F_{p^k} with the deterministic modulus: the first monic irreducible
// x^k + c_{k-1} x^{k-1} + ... + c_0 when candidates are enumerated by
// ascending value of sum c_i p^i.
Field make_extension_field(std::int64_t p, int k);

} // namespace cendiv
