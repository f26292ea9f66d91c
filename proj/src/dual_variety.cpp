#include "mather/dual_variety.hpp"

#include "mather/duality.hpp"
#include "mather/errors.hpp"
#include "mather/intpoly.hpp"

namespace mather {

DualReport dual_defect_degree(const ChowClass& unsigned_c, int dim) {
    const int n = unsigned_c.ambient();
    if (dim < 0 || dim > n - 1)
        throw ValidationError("dual_defect_degree: dim out of range");
    if (!unsigned_c.is_proper())
        throw NonProperClass("dual_defect_degree: class has a nonzero [P^n] coefficient");
    if (unsigned_c.is_zero()) throw ZeroClass("dual_defect_degree: zero class");

    const ChowClass s = signed_class(unsigned_c, dim);
    const RankVector a = ranks_of(s);
    int defect = -1;
    for (int i = 0; i < n; ++i)
        if (a[i] != 0) { defect = i; break; }
    if (defect < 0) throw ZeroClass("dual_defect_degree: all ranks vanish");

    // Independent route: order of vanishing and trailing coefficient of the
    // dualized unsigned polynomial view.
    const HPolyView dual_poly = jn(poly_of_class(unsigned_c));
    const IntPoly dp(dual_poly.coeffs());
    const int ord = dp.order();
    const int dual_dim = n - 1 - defect;
    if (ord != defect + 1)
        throw std::logic_error("dual_defect_degree: rank/vanishing-order disagreement");
    if (dp.coeff(ord) != neg_one_pow(dim + dual_dim) * a[defect])
        throw std::logic_error("dual_defect_degree: rank/trailing-coefficient disagreement");

    DualReport rep{defect,
                   defect + 1,
                   dual_dim,
                   a[defect],
                   abs(a[defect]),
                   dual_class(s)};
    return rep;
}

Int mt_dual_degree(const ChowClass& unsigned_c, int dim, int r) {
    const int n = unsigned_c.ambient();
    if (dim < 0 || dim > n) throw ValidationError("mt_dual_degree: dim out of range");
    if (r < 1) throw ValidationError("mt_dual_degree: r must be >= 1");
    PascalTriangle pt(r + 1);
    const IntPoly q(poly_of_class(unsigned_c).coeffs());
    const IntPoly inv = IntPoly::one_plus_h_pow(r + 1, n).inverse_trunc(n);
    Int acc = 0;
    for (int j = 0; j < r; ++j) {
        // \int H^j/(1+H)^(r+1) cap c = H^n coefficient of H^j inv(H) q(H).
        const Int integral = inv.mul_trunc(q, n).shifted(j).coeff(n);
        acc += pt.choose(r + 1, j) * (r - j) * integral;
    }
    return Int(neg_one_pow(dim + r + 1) * acc);
}

bool PartialRankVector::all_known() const {
    for (bool k : known)
        if (!k) return false;
    return true;
}

PartialRankVector hypersurface_ranks(int n, const Int& d, int sing_dim) {
    if (n < 2) throw ValidationError("hypersurface_ranks: n must be >= 2");
    if (d < 1) throw ValidationError("hypersurface_ranks: d must be >= 1");
    if (sing_dim < -1 || sing_dim > n - 1)
        throw ValidationError("hypersurface_ranks: sing_dim out of range");
    PartialRankVector out;
    out.ambient = n;
    out.ranks.assign(static_cast<size_t>(n), Int(0));
    out.known.assign(static_cast<size_t>(n), false);
    const int first_known = (d == 1) ? 0 : sing_dim + 1;
    for (int i = first_known; i < n; ++i) {
        out.ranks[static_cast<size_t>(i)] =
            d * pow_int(d - 1, static_cast<unsigned long>(n - 1 - i));
        out.known[static_cast<size_t>(i)] = true;
    }
    return out;
}

}  // namespace mather
