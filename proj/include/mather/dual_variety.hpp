#ifndef MATHER_DUAL_VARIETY_HPP
#define MATHER_DUAL_VARIETY_HPP

#include "mather/chow.hpp"

namespace mather {

struct DualReport {
    int defect = 0;            // smallest index with nonzero rank
    int dual_codim = 1;        // defect + 1
    int dual_dim = 0;          // ambient - 1 - defect
    Int dual_degree_signed;    // rank at the defect index
    Int dual_degree;           // absolute value of the above
    ChowClass dual_class_signed;
};

// Defect and degree of the dual, computed from the ranks and re-derived from
// the order of vanishing of the dualized polynomial view; the two routes are
// checked against each other. Input is the unsigned class of a
// dim-dimensional variety.
DualReport dual_defect_degree(const ChowClass& unsigned_c, int dim);

// Degree of the dual via the hypersurface cut formula: with r the codimension
// of the dual,
//   (-1)^(dim+r+1) sum_{j=0}^{r-1} C(r+1, j) (r-j) \int H^j/(1+H)^(r+1) cap c.
// The value is meaningful only when r really is the dual's codimension;
// preconditions (proper class, support within dim) are the caller's duty.
Int mt_dual_degree(const ChowClass& unsigned_c, int dim, int r);

// Rank vector of a degree-d hypersurface in P^n whose singular locus has
// dimension <= sing_dim: entries above sing_dim are d(d-1)^(n-1-i), entries
// at or below are unknown. d = 1 pins every entry (hyperplanes are linear).
struct PartialRankVector {
    int ambient = 0;
    std::vector<Int> ranks;    // valid only where known
    std::vector<bool> known;

    bool all_known() const;
};

PartialRankVector hypersurface_ranks(int n, const Int& d, int sing_dim);

}  // namespace mather

#endif
