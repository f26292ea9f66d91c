#include "mather/duality.hpp"

#include "mather/errors.hpp"
#include "mather/linalg.hpp"

namespace mather {

HPolyView jn(const HPolyView& p) {
    const int n = p.ambient();
    PascalTriangle pt(n + 1);
    Int p_at_m1 = p.eval(Int(-1));
    std::vector<Int> out(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        Int acc = 0;
        for (int k = m; k <= n; ++k) acc += neg_one_pow(k) * pt.choose(k, m) * p[k];
        out[static_cast<size_t>(m)] = acc - p_at_m1 * pt.choose(n + 1, m);
    }
    return HPolyView(n, std::move(out));
}

std::vector<std::vector<Int>> jn_coefficient_matrix(int n) {
    if (n < 0) throw ValidationError("jn_coefficient_matrix: n must be >= 0");
    PascalTriangle pt(n + 1);
    std::vector<std::vector<Int>> m(static_cast<size_t>(n) + 1,
                                    std::vector<Int>(static_cast<size_t>(n) + 1));
    for (int row = 0; row <= n; ++row)
        for (int k = 0; k <= n; ++k)
            m[static_cast<size_t>(row)][static_cast<size_t>(k)] =
                neg_one_pow(k) * (pt.choose(k, row) - pt.choose(n + 1, row));
    return m;
}

ChowClass dual_class(const ChowClass& signed_c) {
    if (signed_c.is_zero()) throw ZeroClass("dual_class: zero class");
    if (!signed_c.is_proper())
        throw NonProperClass("dual_class: class has a nonzero [P^n] coefficient");
    return class_of_poly(jn(poly_of_class(signed_c)));
}

UnsignedDual dual_class_unsigned(const ChowClass& unsigned_c, int dim) {
    const ChowClass s = signed_class(unsigned_c, dim);
    const ChowClass dual_signed = dual_class(s);
    const RankVector a = ranks_of(s);
    int defect = -1;
    for (int i = 0; i < a.ambient(); ++i)
        if (a[i] != 0) { defect = i; break; }
    // dual_class would have rejected a zero class already
    const int dual_dim = unsigned_c.ambient() - 1 - defect;
    return UnsignedDual{signed_class(dual_signed, dual_dim), dual_dim};
}

bool is_self_dual(const ChowClass& signed_c) {
    return dual_class(signed_c) == signed_c;
}

std::vector<Rat> AffineFamily::at(std::span<const Rat> params) const {
    if (params.size() != basis.size())
        throw ValidationError("AffineFamily::at: wrong number of parameters");
    std::vector<Rat> out = particular;
    for (size_t t = 0; t < basis.size(); ++t)
        for (size_t j = 0; j < out.size(); ++j) out[j] += params[t] * basis[t][j];
    return out;
}

AffineFamily self_dual_family(int n, const std::map<int, Int>& fixed) {
    if (n < 1) throw ValidationError("self_dual_family: n must be >= 1");
    for (const auto& [j, v] : fixed) {
        (void)v;
        if (j < 0 || j > n - 1)
            throw ValidationError("self_dual_family: fixed index out of range");
    }

    // Variables (columns) are the signed-class coefficients alpha_0..alpha_{n-1};
    // alpha_n = 0 is structural. Fixed-point rows come from J_n - id acting on
    // the polynomial view, with q_k = alpha_{n-k}.
    const auto jmat = jn_coefficient_matrix(n);
    std::vector<std::vector<Int>> rows;
    std::vector<Int> rhs;
    for (int m = 1; m <= n; ++m) {
        std::vector<Int> row(static_cast<size_t>(n));
        bool nonzero = false;
        for (int j = 0; j <= n - 1; ++j) {
            const int k = n - j;
            Int v = jmat[static_cast<size_t>(m)][static_cast<size_t>(k)];
            if (k == m) v -= 1;
            if (v != 0) nonzero = true;
            row[static_cast<size_t>(j)] = std::move(v);
        }
        if (!nonzero) continue;
        rows.push_back(std::move(row));
        rhs.emplace_back(0);
    }
    for (const auto& [j, v] : fixed) {
        std::vector<Int> row(static_cast<size_t>(n));
        row[static_cast<size_t>(j)] = 1;
        rows.push_back(std::move(row));
        rhs.push_back(v);
    }

    std::vector<std::vector<Rat>> a(rows.size(), std::vector<Rat>(static_cast<size_t>(n)));
    std::vector<Rat> b(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        for (int c = 0; c < n; ++c) a[r][static_cast<size_t>(c)] = Rat(rows[r][static_cast<size_t>(c)]);
        b[r] = Rat(rhs[r]);
    }
    // Pivot on high indices first so the free variables land on the
    // lowest-index unconstrained coefficients.
    std::vector<int> order(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) order[static_cast<size_t>(c)] = n - 1 - c;
    auto sol = solve_rational(a, b, order);
    if (!sol)
        throw InconsistentConstraints(
            "self_dual_family: no class satisfies the fixed coefficients");

    AffineFamily fam;
    fam.ambient = n;
    fam.free_coefficients = sol->free_vars;
    fam.particular.assign(static_cast<size_t>(n) + 1, Rat(0));
    for (int j = 0; j < n; ++j) fam.particular[static_cast<size_t>(j)] = sol->particular[static_cast<size_t>(j)];
    for (auto& dir : sol->basis) {
        dir.emplace_back(0);  // [P^n] slot
        fam.basis.push_back(std::move(dir));
    }
    fam.constraint_matrix = rows;
    fam.constraint_rhs = rhs;

    auto isol = solve_integer(rows, rhs, static_cast<size_t>(n));
    if (isol.solvable) {
        fam.integral = true;
        fam.integer_particular = std::move(isol.particular);
        fam.integer_particular.emplace_back(0);
        for (auto& v : isol.lattice) {
            v.emplace_back(0);
            fam.integer_basis.push_back(std::move(v));
        }
    }
    return fam;
}

bool even_dim_self_dual_check(const ChowClass& signed_c, int dim) {
    const int n = signed_c.ambient();
    if (n % 2 != 0)
        throw AmbientOdd("even_dim_self_dual_check: ambient dimension is odd");
    if (!signed_c.is_proper())
        throw NonProperClass(
            "even_dim_self_dual_check: class has a nonzero [P^n] coefficient");
    const ChowClass c = signed_class(signed_c, dim);
    Int acc = 0;
    for (int j = 0; j <= n; ++j) acc += neg_one_pow(j) * c[j];
    return acc == 0;
}

}  // namespace mather
