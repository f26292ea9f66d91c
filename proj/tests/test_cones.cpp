#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mather/cones.hpp"
#include "mather/duality.hpp"
#include "mather/errors.hpp"
#include "support.hpp"

using namespace mather;

namespace {

// Ascending class coefficients <-> H-polynomial on P^n (index reversal).
oracle::Poly view(const oracle::Poly& coeffs, int n) {
    oracle::Poly q(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) q[static_cast<size_t>(i)] = oracle::at(coeffs, n - i);
    return q;
}

// Closed-form cone polynomial on P^n over q on P^m:
//   (1+t)^(n-m) q + (-1)^m q(-1) t^(m+1) ((1+t)^(n-m) - t^(n-m)).
oracle::Poly cone_poly(const oracle::Poly& q, int m, int n) {
    oracle::Poly out = oracle::mul_trunc(oracle::one_plus_t_pow(n - m, n), q, n);
    oracle::Poly tail(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n - m; ++i)
        tail[static_cast<size_t>(i + m + 1)] = oracle::binom(n - m, i);
    const oracle::i64 s = (m % 2 == 0) ? 1 : -1;
    return oracle::add(out, oracle::scale(tail, s * oracle::eval(q, -1)));
}

// Involution composition: J_n((-t)^(n-m) J_m(q)).
oracle::Poly cone_poly_two_step(const oracle::Poly& q, int m, int n) {
    const oracle::Poly inner = oracle::jn_subst(q, m);
    oracle::Poly lifted(static_cast<size_t>(n) + 1, 0);
    const oracle::i64 s = ((n - m) % 2 == 0) ? 1 : -1;
    for (int i = 0; i <= m; ++i)
        lifted[static_cast<size_t>(i + n - m)] = s * oracle::at(inner, i);
    return oracle::jn_subst(lifted, n);
}

}  // namespace

TEST_CASE("cone over a plane curve") {
    for (oracle::i64 d = 1; d <= 6; ++d) {
        const ChowClass base = oracle::to_class(2, {3 * d - d * d, d, 0});
        CHECK(cone_class(base, 3) ==
              oracle::to_class(3, {5 * d - 2 * d * d, 4 * d - d * d, d, 0}));
        for (int n = 3; n <= 6; ++n) {
            const oracle::Poly q = view({3 * d - d * d, d, 0}, 2);
            const oracle::Poly want = cone_poly(q, 2, n);
            CHECK(oracle::from_class(cone_class(base, n)) == view(want, n));
            CHECK(want == cone_poly_two_step(q, 2, n));
        }
    }
    CHECK(cone_class(smooth_hypersurface_class(2, 2), 3) ==
          ChowClass(3, {Int(2), Int(4), Int(2), Int(0)}));
}

TEST_CASE("both routes agree on random bases") {
    for (int iter = 0; iter < 300; ++iter) {
        const int m = static_cast<int>(oracle::pick(1, 9));
        const int n = static_cast<int>(oracle::pick(m + 1, 12));
        const oracle::Poly coeffs = oracle::random_coeffs(m, m - 1);
        const oracle::Poly q = view(coeffs, m);
        const oracle::Poly want = cone_poly(q, m, n);
        CHECK(want == cone_poly_two_step(q, m, n));
        CHECK(oracle::from_class(cone_class(oracle::to_class(m, coeffs), n)) ==
              view(want, n));
    }
}

TEST_CASE("cone over a linear space is the joined linear space") {
    for (int n = 2; n <= 8; ++n)
        for (int m = 1; m < n; ++m)
            for (int k = 0; k < m; ++k) {
                const ChowClass base = signed_class(pk_class(k, m), k);
                CHECK(cone_class(base, n) ==
                      signed_class(pk_class(k + n - m, n), k + n - m));
                CHECK(vertex_euler_obstruction(base, k) == 1);
            }
}

TEST_CASE("general-vertex form matches the complementary form on embedded bases") {
    for (int iter = 0; iter < 300; ++iter) {
        const int m = static_cast<int>(oracle::pick(1, 8));
        const int n = static_cast<int>(oracle::pick(m + 1, 10));
        const oracle::Poly coeffs = oracle::random_coeffs(m, m - 1);
        oracle::Poly padded = coeffs;
        padded.resize(static_cast<size_t>(n) + 1, 0);
        CHECK(cone_class(oracle::to_class(m, coeffs), n) ==
              cone_class_general(oracle::to_class(n, padded), n - m + 1));
    }
}

TEST_CASE("cones needing a general vertex") {
    // Twisted cubic: no plane contains it, so only the r-form applies.
    const ChowClass cubic(3, {Int(2), Int(3), Int(0), Int(0)});
    CHECK(cone_class_general(cubic, 2) == ChowClass(3, {Int(1), Int(5), Int(3), Int(0)}));
    CHECK(vertex_euler_obstruction(cubic, 1) == -1);

    // e points in P^2 give e concurrent lines.
    for (oracle::i64 e = 1; e <= 5; ++e)
        CHECK(cone_class_general(oracle::to_class(2, {e, 0, 0}), 2) ==
              oracle::to_class(2, {2 * e, e, 0}));
}

TEST_CASE("vertex Euler obstruction") {
    for (oracle::i64 d = 1; d <= 10; ++d) {
        const ChowClass base = oracle::to_class(2, {3 * d - d * d, d, 0});
        const oracle::i64 g = (d - 1) * (d - 2) / 2;
        CHECK(vertex_euler_obstruction(base, 1) == 2 * d - d * d);
        CHECK(vertex_euler_obstruction(base, 1) == 2 - 2 * g - d);
    }
    // Equivalent form (-1)^m q(-1) on random classes.
    for (int iter = 0; iter < 100; ++iter) {
        const int m = static_cast<int>(oracle::pick(1, 10));
        const int dim = static_cast<int>(oracle::pick(0, m - 1));
        const oracle::Poly coeffs = oracle::random_coeffs(m, dim);
        const oracle::i64 s = (m % 2 == 0) ? 1 : -1;
        CHECK(vertex_euler_obstruction(oracle::to_class(m, coeffs), dim) ==
              s * oracle::eval(view(coeffs, m), -1));
    }
}

TEST_CASE("pullback along the cone projection") {
    for (int iter = 0; iter < 200; ++iter) {
        const int m = static_cast<int>(oracle::pick(0, 8));
        const int n = static_cast<int>(oracle::pick(m, 10));
        const oracle::Poly coeffs = oracle::random_coeffs(m, m);
        const ChowClass base = oracle::to_class(m, coeffs);
        const oracle::Poly want =
            oracle::mul_trunc(oracle::one_plus_t_pow(n - m, n), view(coeffs, m), n);
        CHECK(oracle::from_class(pullback_class(base, n)) == view(want, n));
        if (n == m) CHECK(pullback_class(base, n) == base);
    }
    for (int iter = 0; iter < 50; ++iter) {
        const int m = static_cast<int>(oracle::pick(1, 6));
        const int n = static_cast<int>(oracle::pick(m, 8));
        const oracle::Poly a = oracle::random_coeffs(m, m);
        const oracle::Poly b = oracle::random_coeffs(m, m);
        CHECK(oracle::from_class(pullback_class(oracle::to_class(m, oracle::add(a, b)), n)) ==
              oracle::add(oracle::from_class(pullback_class(oracle::to_class(m, a), n)),
                          oracle::from_class(pullback_class(oracle::to_class(m, b), n))));
    }
    CHECK_THROWS_AS(pullback_class(ChowClass(3, {Int(1), Int(0), Int(0), Int(0)}), 2),
                    ValidationError);
}

TEST_CASE("rank vector of a cone appends low zeros") {
    const RankVector cr = ranks_of(signed_class(cone_class(smooth_hypersurface_class(2, 2), 3), 2));
    CHECK(cr[0] == 0);
    CHECK(cr[1] == 2);
    CHECK(cr[2] == 2);

    for (int iter = 0; iter < 200; ++iter) {
        const int m = static_cast<int>(oracle::pick(1, 8));
        const int n = static_cast<int>(oracle::pick(m + 1, 10));
        const ChowClass base = oracle::to_class(m, oracle::random_coeffs(m, m - 1));
        const RankVector a = ranks_of(signed_class(base, m - 1));
        const RankVector b = ranks_of(signed_class(cone_class(base, n), n - 1));
        for (int i = 0; i < n - m; ++i) CHECK(b[i] == 0);
        for (int i = 0; i < m; ++i) CHECK(b[i + n - m] == a[i]);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(ConeSpec::complementary(3, 3), ValidationError);
    CHECK_THROWS_AS(ConeSpec::complementary(-1, 3), ValidationError);
    CHECK_THROWS_AS(ConeSpec::general(3, 1), ValidationError);
    CHECK_THROWS_AS(ConeSpec::general(3, 4), ValidationError);
    CHECK(ConeSpec::complementary(2, 5).vertex_dim() == 2);
    CHECK(ConeSpec::general(5, 3).vertex_dim() == 1);

    CHECK_THROWS_AS(cone_class(ChowClass(2, {Int(0), Int(0), Int(1)}), 4), NonProperClass);
    CHECK_THROWS_AS(cone_class(ChowClass(3, {Int(1), Int(0), Int(0), Int(0)}), 3),
                    ValidationError);

    const ChowClass wide(3, {Int(1), Int(1), Int(1), Int(0)});
    CHECK_THROWS_AS(cone_class_general(wide, 2), NotDivisible);
    CHECK_THROWS_AS(cone_class_general(wide, 1), ValidationError);
}
