#include "mather/linalg.hpp"

#include "mather/errors.hpp"

namespace mather {

std::optional<RationalAffineSolution> solve_rational(
    const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
    std::span<const int> col_order) {
    const size_t rows = a.size();
    if (b.size() != rows) throw ValidationError("solve_rational: rhs size mismatch");
    const size_t vars = rows == 0 ? col_order.size() : a[0].size();
    if (col_order.size() != vars)
        throw ValidationError("solve_rational: col_order must list every variable");

    // Augmented working copy.
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(vars + 1));
    for (size_t r = 0; r < rows; ++r) {
        if (a[r].size() != vars) throw ValidationError("solve_rational: ragged matrix");
        for (size_t c = 0; c < vars; ++c) m[r][c] = a[r][c];
        m[r][vars] = b[r];
    }

    std::vector<int> pivot_row_of_col(vars, -1);
    size_t next_row = 0;
    for (int col : col_order) {
        const size_t c = static_cast<size_t>(col);
        size_t r = next_row;
        while (r < rows && m[r][c] == 0) ++r;
        if (r == rows) continue;
        std::swap(m[r], m[next_row]);
        r = next_row;
        const Rat inv = 1 / m[r][c];
        for (size_t k = 0; k <= vars; ++k) m[r][k] *= inv;
        for (size_t r2 = 0; r2 < rows; ++r2) {
            if (r2 == r || m[r2][c] == 0) continue;
            const Rat f = m[r2][c];
            for (size_t k = 0; k <= vars; ++k) m[r2][k] -= f * m[r][k];
        }
        pivot_row_of_col[c] = static_cast<int>(r);
        ++next_row;
    }
    for (size_t r = next_row; r < rows; ++r)
        if (m[r][vars] != 0) return std::nullopt;

    RationalAffineSolution sol;
    for (size_t c = 0; c < vars; ++c)
        if (pivot_row_of_col[c] < 0) sol.free_vars.push_back(static_cast<int>(c));

    sol.particular.assign(vars, Rat(0));
    for (size_t c = 0; c < vars; ++c)
        if (pivot_row_of_col[c] >= 0)
            sol.particular[c] = m[static_cast<size_t>(pivot_row_of_col[c])][vars];

    for (int f : sol.free_vars) {
        std::vector<Rat> dir(vars, Rat(0));
        dir[static_cast<size_t>(f)] = 1;
        for (size_t c = 0; c < vars; ++c)
            if (pivot_row_of_col[c] >= 0)
                dir[c] = -m[static_cast<size_t>(pivot_row_of_col[c])][static_cast<size_t>(f)];
        sol.basis.push_back(std::move(dir));
    }
    return sol;
}

namespace {

// Unimodular column step mixing columns (lead, other) so that row `r` becomes
// (g, 0) there; applied to both the working matrix and the transform u.
void gcd_columns(std::vector<std::vector<Int>>& w, std::vector<std::vector<Int>>& u,
                 size_t r, size_t lead, size_t other) {
    const Int a = w[r][lead];
    const Int b = w[r][other];
    if (b == 0) return;
    if (a == 0) {
        for (auto& row : w) std::swap(row[lead], row[other]);
        for (auto& row : u) std::swap(row[lead], row[other]);
        return;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    const Int p = a / g;
    const Int q = b / g;
    // (lead, other) <- (s*lead + t*other, -q*lead + p*other); det = s*p + t*q = 1.
    for (auto& row : w) {
        const Int x = row[lead];
        const Int y = row[other];
        row[lead] = s * x + t * y;
        row[other] = p * y - q * x;
    }
    for (auto& row : u) {
        const Int x = row[lead];
        const Int y = row[other];
        row[lead] = s * x + t * y;
        row[other] = p * y - q * x;
    }
}

}  // namespace

IntegerAffineSolution solve_integer(const std::vector<std::vector<Int>>& a,
                                    const std::vector<Int>& b, size_t vars) {
    const size_t rows = a.size();
    if (b.size() != rows) throw ValidationError("solve_integer: rhs size mismatch");

    std::vector<std::vector<Int>> w = a;
    for (const auto& row : w)
        if (row.size() != vars) throw ValidationError("solve_integer: ragged matrix");
    std::vector<std::vector<Int>> u(vars, std::vector<Int>(vars, Int(0)));
    for (size_t i = 0; i < vars; ++i) u[i][i] = 1;

    std::vector<Int> y(vars, Int(0));
    size_t lead = 0;
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = lead + 1; c < vars; ++c) gcd_columns(w, u, r, lead, c);
        Int residual = b[r];
        for (size_t c = 0; c < lead; ++c) residual -= w[r][c] * y[c];
        if (lead < vars && w[r][lead] != 0) {
            if (residual % w[r][lead] != 0) return {};  // no integer point
            y[lead] = residual / w[r][lead];
            ++lead;
        } else if (residual != 0) {
            return {};
        }
    }

    IntegerAffineSolution sol;
    sol.solvable = true;
    sol.particular.assign(vars, Int(0));
    for (size_t i = 0; i < vars; ++i)
        for (size_t c = 0; c < lead; ++c) sol.particular[i] += u[i][c] * y[c];
    for (size_t c = lead; c < vars; ++c) {
        std::vector<Int> v(vars);
        for (size_t i = 0; i < vars; ++i) v[i] = u[i][c];
        // Sign-normalize on the lowest nonzero entry for stable output.
        for (size_t i = 0; i < vars; ++i) {
            if (v[i] == 0) continue;
            if (v[i] < 0)
                for (auto& x : v) x = -x;
            break;
        }
        sol.lattice.push_back(std::move(v));
    }
    return sol;
}

}  // namespace mather
