#pragma once

#include "cendiv/divisor.hpp"

namespace cendiv {

using CartanMatrix = std::vector<std::vector<std::int64_t>>;

// Cartan matrix of the block with power indices P = {u_1 > u_2 > ...}:
// entry (k, l) = u_max(k,l) = min(u_k, u_l). This is the split-block Cartan
// matrix, i.e. after base change to a splitting field of the block's base.
CartanMatrix cartan_matrix(const std::vector<int>& pset);

// Dominant dimension of the centralizer algebra: infinity iff every P-set is
// a singleton (symmetric Nakayama case), else exactly 2.
struct DominantDimension {
    bool infinite = false;
    int value() const { return infinite ? -1 : 2; }
    std::string to_string() const { return infinite ? "inf" : "2"; }
    bool operator==(const DominantDimension& o) const { return infinite == o.infinite; }
};
DominantDimension dominant_dimension(const DivisorProfile& p);

// Representation-finiteness over a perfect field: every block's P-set is
// contained in {1, b-1, b} with b = max(3, max P).
bool representation_finite(const DivisorProfile& p);

struct BlockReport {
    Poly base;
    int loewy_length = 0;  // n_i
    int simple_count = 0;  // |P|
    CartanMatrix cartan;
    bool semisimple = false;         // n_i == 1
    bool symmetric_nakayama = false; // |P| == 1
};

struct StructureReport {
    std::vector<BlockReport> blocks;
    std::int64_t algebra_dim = 0;
    DominantDimension dominant_dimension;
    bool representation_finite = false;
    bool principal_cyclic = false; // centralizer equals R[c]
};

StructureReport structure_report(const DivisorProfile& p);

} // namespace cendiv
