#include "cendiv/structure.hpp"
#include "cendiv/errors.hpp"

#include <algorithm>

namespace cendiv {

CartanMatrix cartan_matrix(const std::vector<int>& pset) {
    if (pset.empty())
        throw precondition_error("cartan_matrix: empty P-set");
    for (std::size_t i = 0; i + 1 < pset.size(); ++i)
        if (pset[i] <= pset[i + 1])
            throw precondition_error("cartan_matrix: P-set must be strictly decreasing");
    std::size_t s = pset.size();
    CartanMatrix c(s, std::vector<std::int64_t>(s, 0));
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t l = 0; l < s; ++l) c[k][l] = pset[std::max(k, l)];
    return c;
}

DominantDimension dominant_dimension(const DivisorProfile& p) {
    for (const auto& blk : p.blocks)
        if (blk.pset.size() > 1) return DominantDimension{false};
    return DominantDimension{true};
}

bool representation_finite(const DivisorProfile& p) {
    for (const auto& blk : p.blocks) {
        int b = std::max(3, blk.pset.front());
        for (int u : blk.pset)
            if (u != 1 && u != b - 1 && u != b) return false;
    }
    return true;
}

StructureReport structure_report(const DivisorProfile& p) {
    StructureReport r;
    for (const auto& blk : p.blocks)
        r.blocks.push_back(BlockReport{blk.base, blk.exponent,
                                       static_cast<int>(blk.pset.size()),
                                       cartan_matrix(blk.pset), blk.exponent == 1,
                                       blk.pset.size() == 1});
    r.algebra_dim = centralizer_dim(p);
    r.dominant_dimension = dominant_dimension(p);
    r.representation_finite = representation_finite(p);
    r.principal_cyclic = is_principal_cyclic(p);
    return r;
}

} // namespace cendiv
