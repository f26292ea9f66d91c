#include "mather/plucker.hpp"

#include <map>

#include "mather/dual_variety.hpp"
#include "mather/duality.hpp"
#include "mather/errors.hpp"

namespace mather {

Int rho_sum(std::span<const PlaneCurveSing> sings) {
    Int acc = 0;
    for (const auto& s : sings) {
        if (s.multiplicity < 2)
            throw ValidationError("PlaneCurveSing: multiplicity must be >= 2");
        if (s.milnor < 1) throw ValidationError("PlaneCurveSing: milnor must be >= 1");
        acc += s.rho();
    }
    return acc;
}

Int correction_sum(std::span<const HypersurfaceSing> sings) {
    Int acc = 0;
    for (const auto& s : sings) {
        if (s.milnor < 1 || s.milnor_section < 1)
            throw ValidationError("HypersurfaceSing: milnor numbers must be >= 1");
        acc += s.correction();
    }
    return acc;
}

ChowClass plane_curve_class_from_rho(const Int& d, const Int& rho_sum) {
    if (d < 1) throw ValidationError("plane_curve_class: d must be >= 1");
    if (rho_sum < 0) throw ValidationError("plane_curve_class: negative rho sum");
    return ChowClass(2, {Int(-(3 * d - d * d + rho_sum)), Int(-d), Int(0)});
}

ChowClass plane_curve_class(const Int& d, std::span<const PlaneCurveSing> sings) {
    return plane_curve_class_from_rho(d, rho_sum(sings));
}

PlaneCurveDual plane_curve_dual(const Int& d, const Int& rho_sum) {
    if (d < 2) throw ValidationError("plane_curve_dual: d must be >= 2");
    if (rho_sum < 0) throw ValidationError("plane_curve_dual: negative rho sum");
    const Int dual_deg = d * (d - 1) - rho_sum;
    if (dual_deg <= 0)
        throw DegenerateDual("plane_curve_dual: singularity budget at or above d(d-1)");
    const Int dual_rho = rho_sum * rho_sum - (2 * d * d - 2 * d - 1) * rho_sum +
                         d * d * d * (d - 2);
    ChowClass cls(2, {Int(-(d * (2 * d - 3) - 2 * rho_sum)), Int(-dual_deg), Int(0)});
    return PlaneCurveDual{std::move(cls), dual_deg, dual_rho};
}

ChowClass piene_isolated_class(int n, const Int& d,
                               std::span<const HypersurfaceSing> sings) {
    if (n < 2) throw ValidationError("piene_isolated_class: n must be >= 2");
    ChowClass out = smooth_hypersurface_class(n, d);
    const Int corr = correction_sum(sings);
    if (corr == 0) return out;
    std::vector<Int> coeffs = out.coeffs();
    coeffs[0] += neg_one_pow(n) * corr;
    return ChowClass(n, std::move(coeffs));
}

Int teissier_dual_degree(int n, const Int& d,
                         std::span<const HypersurfaceSing> sings) {
    if (n < 2) throw ValidationError("teissier_dual_degree: n must be >= 2");
    if (d < 1) throw ValidationError("teissier_dual_degree: d must be >= 1");
    return d * pow_int(d - 1, static_cast<unsigned long>(n) - 1) - correction_sum(sings);
}

Int curve_ed_degree(const Int& d, const Int& rho_sum) {
    if (d < 1) throw ValidationError("curve_ed_degree: d must be >= 1");
    if (rho_sum < 0) throw ValidationError("curve_ed_degree: negative rho sum");
    return d * d - rho_sum;
}

ChowClass self_dual_surface_class(const Int& d, const Int& e) {
    if (d < 1) throw ValidationError("self_dual_surface_class: d must be >= 1");
    return ChowClass(3, {Int(2 * (e - d)), e, d, Int(0)});
}

ChowClass self_dual_surface_class_isolated(const Int& d) {
    return self_dual_surface_class(d, Int(-d * (d - 4)));
}

RhoBudget self_dual_rho_budget(const Int& d) {
    if (d < 2) throw ValidationError("self_dual_rho_budget: d must be >= 2");
    const Int rho = d * d * (d - 2);
    Rat nodes(rho);
    nodes /= 2;
    return RhoBudget{rho, nodes, rho % 2 == 0};
}

HypconsVerdict hypcons_check(int n, const Int& d, int sing_dim) {
    if (n < 2) throw ValidationError("hypcons_check: n must be >= 2");
    if (d < 1) throw ValidationError("hypcons_check: d must be >= 1");
    if (sing_dim < -1 || sing_dim > n - 1)
        throw ValidationError("hypcons_check: sing_dim out of range");

    const bool feasible = !(d >= 3 && 2 * sing_dim < n - 3);

    // Re-derivation: the known top ranks pin the top coefficients of the
    // signed class; feed those to the solver and see whether any self-dual
    // class matches them.
    const PartialRankVector pr = hypersurface_ranks(n, d, sing_dim);
    PascalTriangle pt(n);
    std::map<int, Int> fixed;
    for (int j = 0; j < n; ++j) {
        bool determined = true;
        for (int i = j; i < n; ++i)
            if (!pr.known[static_cast<size_t>(i)]) { determined = false; break; }
        if (!determined) continue;
        Int alpha = 0;
        for (int i = j; i < n; ++i)
            alpha += pr.ranks[static_cast<size_t>(i)] * neg_one_pow(i) *
                     pt.choose(i + 1, j + 1);
        fixed.emplace(j, std::move(alpha));
    }
    bool solver_feasible = true;
    try {
        self_dual_family(n, fixed);
    } catch (const InconsistentConstraints&) {
        solver_feasible = false;
    }
    return HypconsVerdict{feasible, solver_feasible, feasible == solver_feasible};
}

}  // namespace mather
