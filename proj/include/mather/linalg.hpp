#ifndef MATHER_LINALG_HPP
#define MATHER_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "mather/arith.hpp"

namespace mather {

/*
 * Exact affine solvers for small dense systems A x = b. The rational solver
 * pivots greedily along a caller-supplied column order, so the caller decides
 * which variables end up free; the integer solver reduces A with unimodular
 * column operations (gcd steps) and reports the solution coset, if any, as a
 * particular point plus a lattice basis of the integer kernel.
 */

struct RationalAffineSolution {
    std::vector<Rat> particular;           // one entry per variable
    std::vector<std::vector<Rat>> basis;   // kernel directions, one per free var
    std::vector<int> free_vars;            // ascending variable indices
};

// Returns nullopt when the system is inconsistent. col_order lists every
// variable index exactly once, in the order pivots should be attempted.
std::optional<RationalAffineSolution> solve_rational(
    const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
    std::span<const int> col_order);

struct IntegerAffineSolution {
    bool solvable = false;
    std::vector<Int> particular;
    std::vector<std::vector<Int>> lattice;  // basis of {x in Z^n : A x = 0}
};

IntegerAffineSolution solve_integer(const std::vector<std::vector<Int>>& a,
                                    const std::vector<Int>& b, size_t vars);

}  // namespace mather

#endif
