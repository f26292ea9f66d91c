#ifndef MATHER_CONES_HPP
#define MATHER_CONES_HPP

#include "mather/chow.hpp"

namespace mather {

// Geometry of a cone construction: either a cone in P^n over a base in a
// complementary linear subspace P^m (vertex a linear P^(n-m-1)), or a cone
// over a base of codimension >= r with an (r-2)-dimensional general vertex.
struct ConeSpec {
    enum class Kind { complementary, general };

    static ConeSpec complementary(int base_ambient, int target_ambient);
    static ConeSpec general(int ambient, int r);

    Kind kind;
    int base_ambient;    // m for complementary, n for general
    int target_ambient;  // n
    int r;               // general form only: codimension bound
    int vertex_dim() const;
};

// Unsigned class of the cone in P^n over a base class on a complementary
// P^m (m < n). The base must be proper. The closed-form expansion
//   (1+H)^(n-m) q + (-1)^m q(-1) H^(m+1) ((1+H)^(n-m) - H^(n-m))
// is cross-checked against the involution composition in debug builds.
ChowClass cone_class(const ChowClass& base_unsigned, int n);

// Cone with a general (r-2)-dimensional vertex: base class on P^n supported
// in dimensions <= n-r, r >= 2. Computes J_n((-H)^(r-1) J_{n-r+1}(q)) for the
// polynomial q with base = H^(r-1) q(H) cap [P^n].
ChowClass cone_class_general(const ChowClass& base_unsigned, int r);

// Local Euler obstruction of the cone at a vertex point: the alternating sum
// of the base class coefficients.
Int vertex_euler_obstruction(const ChowClass& base_unsigned, int dim);

// Chern-Schwartz-MacPherson-style pullback along the projection away from a
// complementary vertex: multiplies the polynomial view by (1+H)^(n-m).
ChowClass pullback_class(const ChowClass& base, int n);

}  // namespace mather

#endif
