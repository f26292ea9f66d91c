#ifndef MATHER_TESTS_SUPPORT_HPP
#define MATHER_TESTS_SUPPORT_HPP

// Small-integer reference implementations the suites check the library
// against. Everything here is written straight from the defining formulas
// and never calls into the library. Inputs are kept small enough that
// int64 arithmetic cannot overflow.

#include <random>
#include <vector>

#include "mather/chow.hpp"

namespace oracle {

using i64 = long;
using Poly = std::vector<i64>;  // ascending powers, fixed length

inline i64 binom(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    std::vector<i64> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<i64> next(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            next[static_cast<size_t>(j)] =
                row[static_cast<size_t>(j) - 1] + row[static_cast<size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

inline i64 at(const Poly& p, int i) {
    return (i >= 0 && static_cast<size_t>(i) < p.size()) ? p[static_cast<size_t>(i)] : 0;
}

inline Poly add(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

inline Poly scale(Poly a, i64 s) {
    for (auto& c : a) c *= s;
    return a;
}

inline Poly mul_trunc(const Poly& a, const Poly& b, int max_deg) {
    Poly out(static_cast<size_t>(max_deg) + 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (i + j <= static_cast<size_t>(max_deg)) out[i + j] += a[i] * b[j];
    return out;
}

inline Poly one_plus_t_pow(int k, int max_deg) {
    Poly out(static_cast<size_t>(max_deg) + 1, 0);
    for (int j = 0; j <= k && j <= max_deg; ++j)
        out[static_cast<size_t>(j)] = binom(k, j);
    return out;
}

inline i64 eval(const Poly& p, i64 x) {
    i64 acc = 0;
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// The duality map by direct substitution: p(-1-t) - p(-1)((1+t)^(n+1) - t^(n+1)),
// truncated to degree n. The t^(n+1) terms cancel exactly.
inline Poly jn_subst(const Poly& p, int n) {
    Poly out(static_cast<size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        const i64 pk = at(p, k);
        if (pk == 0) continue;
        const i64 sign = (k % 2 == 0) ? 1 : -1;
        for (int j = 0; j <= k; ++j) out[static_cast<size_t>(j)] += sign * pk * binom(k, j);
    }
    const i64 pm1 = eval(p, -1);
    for (int j = 0; j <= n; ++j) out[static_cast<size_t>(j)] -= pm1 * binom(n + 1, j);
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240817u);
    return gen;
}

inline i64 pick(i64 lo, i64 hi) {
    return std::uniform_int_distribution<i64>(lo, hi)(rng());
}

inline mather::ChowClass to_class(int ambient, const Poly& coeffs_ascending) {
    std::vector<mather::Int> v(static_cast<size_t>(ambient) + 1);
    for (size_t j = 0; j < v.size(); ++j)
        v[j] = at(coeffs_ascending, static_cast<int>(j));
    return mather::ChowClass(ambient, std::move(v));
}

inline Poly from_class(const mather::ChowClass& c) {
    Poly out(static_cast<size_t>(c.ambient()) + 1, 0);
    for (int j = 0; j <= c.ambient(); ++j) {
        REQUIRE(c[j].fits_slong_p());
        out[static_cast<size_t>(j)] = c[j].get_si();
    }
    return out;
}

inline mather::HPolyView to_hpoly(int ambient, const Poly& coeffs) {
    std::vector<mather::Int> v(static_cast<size_t>(ambient) + 1);
    for (size_t i = 0; i < v.size(); ++i) v[i] = at(coeffs, static_cast<int>(i));
    return mather::HPolyView(ambient, std::move(v));
}

inline Poly from_hpoly(const mather::HPolyView& q) {
    Poly out(static_cast<size_t>(q.ambient()) + 1, 0);
    for (int i = 0; i <= q.ambient(); ++i) {
        REQUIRE(q[i].fits_slong_p());
        out[static_cast<size_t>(i)] = q[i].get_si();
    }
    return out;
}

// Random class on P^n supported in dimensions <= top, small coefficients.
inline Poly random_coeffs(int n, int top, i64 bound = 9) {
    Poly out(static_cast<size_t>(n) + 1, 0);
    for (int j = 0; j <= top; ++j) out[static_cast<size_t>(j)] = pick(-bound, bound);
    return out;
}

}  // namespace oracle

#endif
