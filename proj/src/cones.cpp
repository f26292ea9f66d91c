#include "mather/cones.hpp"

#include <cassert>

#include "mather/duality.hpp"
#include "mather/errors.hpp"
#include "mather/intpoly.hpp"

namespace mather {

ConeSpec ConeSpec::complementary(int base_ambient, int target_ambient) {
    if (base_ambient < 0 || base_ambient >= target_ambient)
        throw ValidationError("ConeSpec: need 0 <= m < n");
    return ConeSpec{Kind::complementary, base_ambient, target_ambient, 0};
}

ConeSpec ConeSpec::general(int ambient, int r) {
    if (r < 2 || r > ambient)
        throw ValidationError("ConeSpec: need 2 <= r <= n");
    return ConeSpec{Kind::general, ambient, ambient, r};
}

int ConeSpec::vertex_dim() const {
    return kind == Kind::complementary ? target_ambient - base_ambient - 1 : r - 2;
}

namespace {

HPolyView pad_poly(const IntPoly& p, int ambient) {
    std::vector<Int> v(static_cast<size_t>(ambient) + 1);
    for (int i = 0; i <= ambient; ++i) v[static_cast<size_t>(i)] = p.coeff(i);
    return HPolyView(ambient, std::move(v));
}

// J composition route shared by both cone forms: n ambient of the result,
// q the base polynomial of degree <= n - shift, shift = powers of (-H).
IntPoly cone_by_involution(const IntPoly& q, int small_n, int n, int shift) {
    const HPolyView inner = jn(pad_poly(q, small_n));
    IntPoly lifted(inner.coeffs());
    lifted = lifted.shifted(shift);
    if (shift % 2 != 0) lifted = -lifted;
    return IntPoly(jn(pad_poly(lifted, n)).coeffs());
}

}  // namespace

ChowClass cone_class(const ChowClass& base_unsigned, int n) {
    const int m = base_unsigned.ambient();
    ConeSpec::complementary(m, n);
    if (!base_unsigned.is_proper())
        throw NonProperClass("cone_class: base has a nonzero [P^m] coefficient");

    const IntPoly q(poly_of_class(base_unsigned).coeffs());
    const IntPoly pw = IntPoly::one_plus_h_pow(n - m, n);
    const Int q_at_m1 = q.eval(Int(-1));
    IntPoly out = pw.mul_trunc(q, n);
    const IntPoly tail = (pw - IntPoly::monomial(n - m)).shifted(m + 1).truncated(n);
    out = out + tail * Int(neg_one_pow(m) * q_at_m1);

    assert(out == cone_by_involution(q, m, n, n - m) &&
           "cone_class: expansion and involution routes disagree");
    return class_of_poly(pad_poly(out, n));
}

ChowClass cone_class_general(const ChowClass& base_unsigned, int r) {
    const int n = base_unsigned.ambient();
    ConeSpec::general(n, r);
    if (base_unsigned.top_dim() > n - r)
        throw NotDivisible("cone_class_general: base class supported above dimension n-r");
    const IntPoly q =
        IntPoly(poly_of_class(base_unsigned).coeffs()).divided_by_h_pow(r - 1);
    return class_of_poly(pad_poly(cone_by_involution(q, n - r + 1, n, r - 1), n));
}

Int vertex_euler_obstruction(const ChowClass& base_unsigned, int dim) {
    assert(base_unsigned.top_dim() <= dim &&
           "vertex_euler_obstruction: class supported above dim");
    (void)dim;
    Int acc = 0;
    for (int j = 0; j <= base_unsigned.ambient(); ++j)
        acc += neg_one_pow(j) * base_unsigned[j];
    return acc;
}

ChowClass pullback_class(const ChowClass& base, int n) {
    const int m = base.ambient();
    if (n < m) throw ValidationError("pullback_class: target ambient below base");
    const IntPoly q(poly_of_class(base).coeffs());
    return class_of_poly(pad_poly(IntPoly::one_plus_h_pow(n - m, n).mul_trunc(q, n), n));
}

}  // namespace mather
