#ifndef MATHER_PLUCKER_HPP
#define MATHER_PLUCKER_HPP

#include <span>

#include "mather/chow.hpp"

namespace mather {

// Planar curve singularity with multiplicity m >= 2 and Milnor number mu >= 1;
// it contributes rho = mu + m - 1 to the class of the curve.
struct PlaneCurveSing {
    Int multiplicity;
    Int milnor;

    Int rho() const { return milnor + multiplicity - 1; }
    static PlaneCurveSing node() { return {Int(2), Int(1)}; }
    static PlaneCurveSing cusp() { return {Int(2), Int(2)}; }
};

// Isolated hypersurface singularity: Milnor number of the point and of its
// generic hyperplane section. A node has mu = mu_section = 1.
struct HypersurfaceSing {
    Int milnor;
    Int milnor_section;

    Int correction() const { return milnor + milnor_section; }
    static HypersurfaceSing node() { return {Int(1), Int(1)}; }
};

Int rho_sum(std::span<const PlaneCurveSing> sings);
Int correction_sum(std::span<const HypersurfaceSing> sings);

// Signed class of a degree-d plane curve with the given singularities:
// -(d H + (3d - d^2 + sum rho) H^2) cap [P^2].
ChowClass plane_curve_class(const Int& d, std::span<const PlaneCurveSing> sings);
ChowClass plane_curve_class_from_rho(const Int& d, const Int& rho_sum);

struct PlaneCurveDual {
    ChowClass class_signed;  // signed class of the dual curve
    Int degree;              // d(d-1) - sum rho
    Int rho_sum;             // forced singularity budget of the dual
};

// Dual of a degree-d plane curve with singularity budget R = sum rho.
// Fails with DegenerateDual when d(d-1) - R <= 0.
PlaneCurveDual plane_curve_dual(const Int& d, const Int& rho_sum);

// Unsigned class of a degree-d hypersurface in P^n with isolated
// singularities: the smooth class corrected at [P^0] by
// (-1)^n sum (mu + mu_section).
ChowClass piene_isolated_class(int n, const Int& d,
                               std::span<const HypersurfaceSing> sings);

// Degree of the dual when it is a hypersurface:
// d(d-1)^(n-1) - sum (mu + mu_section).
Int teissier_dual_degree(int n, const Int& d,
                         std::span<const HypersurfaceSing> sings);

// Euclidean distance degree of a plane curve: d^2 - sum rho.
Int curve_ed_degree(const Int& d, const Int& rho_sum);

// Self-dual surface classes in P^3: d[P^2] + e[P^1] + 2(e-d)[P^0], and the
// isolated-singularity member with e = -d(d-4).
ChowClass self_dual_surface_class(const Int& d, const Int& e);
ChowClass self_dual_surface_class_isolated(const Int& d);

// Singularity budget of the isolated self-dual surface of degree d:
// sum rho = d^2(d-2); as nodes only, d^2(d-2)/2 of them, which forces d even.
struct RhoBudget {
    Int rho_sum;
    Rat node_count;
    bool node_count_integral;
};

RhoBudget self_dual_rho_budget(const Int& d);

// Can a degree-d hypersurface in P^n with dim Sing <= sing_dim be self-dual?
// Closed form: impossible iff d >= 3 and sing_dim < (n-3)/2. The same
// question is re-derived by fixing the forced top coefficients and running
// the self-dual solver; both verdicts are returned (they agree for d >= 2;
// for d = 1 the solver also rules out the non-self-dual hyperplane).
struct HypconsVerdict {
    bool feasible;         // closed-form dimension bound
    bool solver_feasible;  // linear-system re-derivation
    bool agree;
};

HypconsVerdict hypcons_check(int n, const Int& d, int sing_dim);

}  // namespace mather

#endif
