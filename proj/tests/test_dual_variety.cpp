#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mather/dual_variety.hpp"
#include "mather/duality.hpp"
#include "mather/errors.hpp"
#include "support.hpp"

using namespace mather;

TEST_CASE("dual reports for the worked classes") {
    const DualReport x =
        dual_defect_degree(ChowClass(4, {Int(6), Int(9), Int(8), Int(3), Int(0)}), 3);
    CHECK(x.defect == 1);
    CHECK(x.dual_codim == 2);
    CHECK(x.dual_dim == 2);
    CHECK(x.dual_degree == 3);
    CHECK(x.dual_degree_signed == 3);
    CHECK(x.dual_class_signed == ChowClass(4, {Int(4), Int(5), Int(3), Int(0), Int(0)}));

    const DualReport s =
        dual_defect_degree(ChowClass(3, {Int(7), Int(11), Int(5), Int(0)}), 2);
    CHECK(s.defect == 1);
    CHECK(s.dual_degree == 4);

    for (int n = 2; n <= 9; ++n)
        for (int k = 0; k < n; ++k) {
            const DualReport lin = dual_defect_degree(signed_class(pk_class(k, n), k), k);
            CHECK(lin.defect == k);
            CHECK(lin.dual_degree == 1);
            CHECK(lin.dual_dim == n - 1 - k);
        }

    for (int n = 2; n <= 6; ++n)
        for (long d = 2; d <= 5; ++d) {
            const DualReport h = dual_defect_degree(smooth_hypersurface_class(n, d), n - 1);
            CHECK(h.defect == 0);
            oracle::i64 expect = d;
            for (int t = 0; t < n - 1; ++t) expect *= d - 1;
            CHECK(h.dual_degree == expect);
        }

    CHECK_THROWS_AS(dual_defect_degree(ChowClass::zero(3), 2), ZeroClass);
    CHECK_THROWS_AS(
        dual_defect_degree(ChowClass(2, {Int(0), Int(0), Int(1)}), 1), NonProperClass);
    CHECK_THROWS_AS(
        dual_defect_degree(ChowClass(3, {Int(1), Int(0), Int(0), Int(0)}), -1),
        ValidationError);
}

TEST_CASE("report invariants on random classes") {
    for (int iter = 0; iter < 300; ++iter) {
        const int n = static_cast<int>(oracle::pick(1, 12));
        const int dim = static_cast<int>(oracle::pick(0, n - 1));
        const ChowClass c = oracle::to_class(n, oracle::random_coeffs(n, dim));
        if (c.is_zero()) continue;
        const DualReport rep = dual_defect_degree(c, dim);
        CHECK(rep.dual_codim == rep.defect + 1);
        CHECK(rep.dual_dim == n - 1 - rep.defect);
        CHECK(rep.dual_degree == abs(rep.dual_degree_signed));
        CHECK(poly_of_class(rep.dual_class_signed).order() == rep.dual_codim);
    }
}

TEST_CASE("rank reversal mirrors defect data through the dual") {
    for (int iter = 0; iter < 200; ++iter) {
        const int n = static_cast<int>(oracle::pick(1, 10));
        const int dim = static_cast<int>(oracle::pick(0, n - 1));
        const ChowClass c = oracle::to_class(n, oracle::random_coeffs(n, dim));
        if (c.is_zero()) continue;
        const DualReport rep = dual_defect_degree(c, dim);
        const RankVector a = ranks_of(signed_class(c, dim));
        const RankVector b = ranks_of(rep.dual_class_signed);
        for (int i = 0; i < n; ++i) CHECK(b[i] == a[n - 1 - i]);
        // The dual's trailing rank slot carries the original leading rank.
        CHECK(b[n - 1 - rep.defect] == rep.dual_degree_signed);
    }
}

TEST_CASE("cut-formula degree expands to -3c0+4c1-4c2+4c3 for codimension 3") {
    for (int n : {4, 6}) {
        const oracle::i64 expect[] = {-3, 4, -4, 4};
        for (int j = 0; j <= 3; ++j) {
            oracle::Poly e(static_cast<size_t>(n) + 1, 0);
            e[static_cast<size_t>(j)] = 1;
            CHECK(mt_dual_degree(oracle::to_class(n, e), 3, 3) == expect[j]);
        }
    }
}

TEST_CASE("cut-formula degree equals the leading rank when lower ranks vanish") {
    for (int iter = 0; iter < 200; ++iter) {
        const int n = static_cast<int>(oracle::pick(2, 10));
        const int r = static_cast<int>(oracle::pick(1, n));
        std::vector<Int> a(static_cast<size_t>(n), Int(0));
        for (int i = r - 1; i < n; ++i) a[static_cast<size_t>(i)] = oracle::pick(-9, 9);
        const ChowClass sc = class_of_ranks(RankVector(n, a));
        const int dim = n - 1;
        const ChowClass c = signed_class(sc, dim);
        CHECK(mt_dual_degree(c, dim, r) == a[static_cast<size_t>(r) - 1]);
    }

    // The threefold whose dual has codimension 2.
    CHECK(mt_dual_degree(ChowClass(4, {Int(6), Int(9), Int(8), Int(3), Int(0)}), 3, 2) == 3);

    CHECK_THROWS_AS(
        mt_dual_degree(ChowClass(3, {Int(1), Int(0), Int(0), Int(0)}), 2, 0),
        ValidationError);
}

TEST_CASE("hypersurface rank tables") {
    const PartialRankVector smooth = hypersurface_ranks(4, 2, -1);
    CHECK(smooth.all_known());
    CHECK(smooth.ranks == std::vector<Int>{Int(2), Int(2), Int(2), Int(2)});

    const PartialRankVector coble = hypersurface_ranks(7, 4, 3);
    CHECK_FALSE(coble.all_known());
    for (int i = 0; i <= 3; ++i) CHECK_FALSE(coble.known[static_cast<size_t>(i)]);
    for (int i = 4; i <= 6; ++i) CHECK(coble.known[static_cast<size_t>(i)]);
    CHECK(coble.ranks[4] == 36);
    CHECK(coble.ranks[5] == 12);
    CHECK(coble.ranks[6] == 4);

    // Hyperplanes are nonsingular whatever bound is claimed.
    for (int s = -1; s <= 3; ++s) {
        const PartialRankVector line = hypersurface_ranks(4, 1, s);
        CHECK(line.all_known());
        CHECK(line.ranks == std::vector<Int>{Int(0), Int(0), Int(0), Int(1)});
    }

    CHECK_THROWS_AS(hypersurface_ranks(1, 2, -1), ValidationError);
    CHECK_THROWS_AS(hypersurface_ranks(4, 0, -1), ValidationError);
    CHECK_THROWS_AS(hypersurface_ranks(4, 2, 4), ValidationError);
    CHECK_THROWS_AS(hypersurface_ranks(4, 2, -2), ValidationError);
}
