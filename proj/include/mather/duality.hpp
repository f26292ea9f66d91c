#ifndef MATHER_DUALITY_HPP
#define MATHER_DUALITY_HPP

#include <map>
#include <span>
#include <vector>

#include "mather/chow.hpp"

namespace mather {

/*
 * The degree-n involution sending the polynomial view of a signed class to
 * that of its projective dual:
 *
 *   (J_n p)(t) = p(-1-t) - p(-1) * ((1+t)^(n+1) - t^(n+1)).
 *
 * J_n is Z-linear, preserves degree <= n, and squares to the identity on
 * polynomials with zero constant term.
 */
HPolyView jn(const HPolyView& p);

// Matrix of J_n on H-coefficient vectors: (jn p)_m = sum_k M[m][k] p_k.
std::vector<std::vector<Int>> jn_coefficient_matrix(int n);

// Dual of a signed class (coefficientwise J_n on the polynomial view).
// The input must be nonzero and proper.
ChowClass dual_class(const ChowClass& signed_c);

struct UnsignedDual {
    ChowClass chow;  // unsigned class of the dual
    int dim;         // dimension of the dual, n - 1 - defect
};

// Convenience wrapper: signs the input, dualizes, and signs back using the
// dual's dimension read off the first nonvanishing rank.
UnsignedDual dual_class_unsigned(const ChowClass& unsigned_c, int dim);

bool is_self_dual(const ChowClass& signed_c);

/*
 * Solution set of "the signed class is a J_n fixed point" together with
 * fixed-coefficient equations alpha_j = v (indices into the signed class,
 * 0 <= j <= n-1). Vectors are indexed by dimension 0..n, with the [P^n]
 * slot pinned to zero. Free parameters sit on the lowest-index unconstrained
 * coefficients, in ascending order.
 */
struct AffineFamily {
    int ambient = 0;
    std::vector<Rat> particular;
    std::vector<std::vector<Rat>> basis;
    std::vector<int> free_coefficients;

    // Integer points of the family, when any exist: a particular integer
    // point plus a lattice basis for the homogeneous integer solutions.
    bool integral = false;
    std::vector<Int> integer_particular;
    std::vector<std::vector<Int>> integer_basis;

    // The constraint rows this family was solved from (A x = b over the
    // first n coefficients), kept for exact re-verification.
    std::vector<std::vector<Int>> constraint_matrix;
    std::vector<Int> constraint_rhs;

    size_t dimension() const { return basis.size(); }
    std::vector<Rat> at(std::span<const Rat> params) const;
};

AffineFamily self_dual_family(int n, const std::map<int, Int>& fixed);

// Necessary condition for self-duality in even ambient dimension: the
// alternating sum of the unsigned coefficients must vanish.
bool even_dim_self_dual_check(const ChowClass& signed_c, int dim);

}  // namespace mather

#endif
