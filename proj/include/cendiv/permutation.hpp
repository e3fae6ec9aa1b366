#pragma once

#include "cendiv/divisor.hpp"

namespace cendiv {

// Cycle type of a permutation. Conjugate permutations share every invariant
// computed here, so permutations are only ever accepted in this form.
struct CycleType {
    std::vector<std::int64_t> parts; // >= 1 each, sorted descending, nonempty

    std::int64_t n() const;
    static CycleType of(std::vector<std::int64_t> parts);
    // "15,1^4" - comma-separated parts with exponent shorthand.
    static CycleType parse(const std::string& text);
    std::string to_string() const; // exponent shorthand, parts descending
    bool operator==(const CycleType& o) const { return parts == o.parts; }
};

// Elementary divisors of the permutation matrix of lambda without building
// the matrix: each part contributes f^{p^{nu_p(part)}} for every irreducible
// factor f of x^{part'} - 1 (part = p^nu * part'). Over Q the factors are the
// cyclotomics of the divisors of the part.
std::vector<DivisorEntry> cycle_type_divisors(const CycleType& lambda, const Field& field);

// Profile assembled from cycle_type_divisors, tagged permutation_origin.
DivisorProfile cycle_type_profile(const CycleType& lambda, const Field& field);

// Split into the p-regular part (parts coprime to p) and the p-singular part
// (parts divisible by p), each padded with fixed points back to n.
// p = 0: everything is regular.
std::pair<CycleType, CycleType> p_split(const CycleType& lambda, std::int64_t p);

// Representation-finiteness of the centralizer algebra of the permutation
// matrix in characteristic p: the nonzero values among nu_p(part) all agree.
bool rep_finite_perm(const CycleType& lambda, std::int64_t p);

// Whether adjoining one fixed point preserves the Morita (equivalently
// derived) class of the centralizer algebra: true iff some part is coprime
// to p.
bool fixed_point_extension_equivalent(const CycleType& lambda, std::int64_t p);

// The permutation matrix of lambda (block diagonal cycle matrices).
MatrixExact permutation_matrix(const CycleType& lambda, const Field& field);

} // namespace cendiv
