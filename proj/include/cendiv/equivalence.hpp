#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cendiv/divisor.hpp"

namespace cendiv {

// The four matrix relations characterizing Morita / derived / almost
// nu-stable derived / stable-of-Morita-type equivalence of the principal
// centralizer algebras.
enum class Relation { M, D, AD, SM };

const char* relation_name(Relation r);        // "M", "D", "AD", "SM"
const char* relation_long_name(Relation r);   // "Morita", "derived", ...
std::optional<Relation> relation_from_string(const std::string& s); // morita|derived|ad|sm

// Which disjunct matched a pair under AD/SM.
enum class PairMode { P_eq_P, P_eq_JP };
const char* pair_mode_name(PairMode m); // "P=P", "P=J(P)"

struct WitnessPair {
    std::string left;  // maximal divisor, unexpanded form, e.g. "x^3"
    std::string right; // e.g. "(x - 1)^3"
    PairMode mode;
};

enum class RefusalKind { none, size_mismatch, no_perfect_matching };

struct EquivalenceVerdict {
    Relation relation;
    bool equivalent = false;
    std::vector<WitnessPair> witness; // present iff equivalent
    RefusalKind refusal = RefusalKind::none;
    int left_size = 0, right_size = 0; // domain sizes (blocks matched)
    std::string theorem;               // "Theorem 1.2(1)".."(4)"
    std::string gloss;                 // categorical meaning
    std::vector<std::string> hypotheses;
    std::string note; // extra remark (permutation profiles: Morita iff derived)
};

// Pair predicate of the relation: the maximal divisors generate isomorphic
// residue algebras AND the relation's P-set condition holds.
//   M:  P_left == P_right
//   D:  H(P_left) == H(P_right) as multisets
//   AD: P_left == P_right or P_left == J(P_right)
//   SM: same disjunction, applied on reducible blocks only
std::pair<bool, PairMode> pair_admissible(Relation rel, const MaximalBlock& left,
                                          const MaximalBlock& right);

// Decide one relation between two profiles over the same field: a perfect
// matching of the relation's domain (all blocks for M/D/AD, reducible blocks
// for SM) under pair_admissible, realized by augmenting paths.
EquivalenceVerdict decide(Relation rel, const DivisorProfile& a, const DivisorProfile& b);

// All four relations in the order M, D, AD, SM, with the implication chain
// (M => AD => D, AD => SM, M => SM) verified internally.
std::vector<EquivalenceVerdict> decide_all(const DivisorProfile& a, const DivisorProfile& b);

} // namespace cendiv
