#ifndef MATHER_CONORMAL_HPP
#define MATHER_CONORMAL_HPP

#include "mather/chow.hpp"

namespace mather {

// Class of a conormal cycle inside P^n x (P^n)*, recorded through its
// bidegrees: bidegrees()[k] multiplies H^(n-k) h^(k+1).
class ConormalCycle {
public:
    ConormalCycle(int ambient, std::vector<Int> bidegrees);

    int ambient() const { return ambient_; }
    const std::vector<Int>& bidegrees() const { return bidegrees_; }
    const Int& operator[](int k) const { return bidegrees_.at(static_cast<size_t>(k)); }

    bool operator==(const ConormalCycle& rhs) const = default;

private:
    int ambient_;
    std::vector<Int> bidegrees_;
};

// Bidegrees of sum_j (-1)^(dim+j) alpha_j (H+h)^(j+1) H^(n-j), expanded as a
// genuine bivariate product modulo H^(n+1) and h^(n+1). The input is the
// unsigned class of a dim-dimensional variety: it must be proper and
// supported in dimensions <= dim.
ConormalCycle conormal_of(const ChowClass& unsigned_c, int dim);

// Inverse reconstruction: solves the triangular system expressing the cycle
// over the (H+h)^(j+1) H^(n-j) basis and returns the signed class.
ChowClass class_of_conormal(const ConormalCycle& cyc);

// Euclidean distance degree: sum_j (-1)^(dim+j) alpha_j (2^(j+1) - 1).
// Counts critical points only when the conormal cycle misses the diagonal
// and the class is the variety's Chern-Mather class.
Int ed_degree(const ChowClass& unsigned_c, int dim);

}  // namespace mather

#endif
