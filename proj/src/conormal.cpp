#include "mather/conormal.hpp"

#include "mather/errors.hpp"

namespace mather {

namespace {

void check_supported(const ChowClass& c, int dim, const char* who) {
    if (dim < 0 || dim > c.ambient() - 1)
        throw ValidationError(std::string(who) + ": dim out of range");
    if (!c.is_proper())
        throw NonProperClass(std::string(who) + ": class has a nonzero [P^n] coefficient");
    if (c.top_dim() > dim)
        throw DimensionMismatch(std::string(who) + ": class supported above dim");
}

// Bivariate polynomials truncated at degree n in each of H and h;
// grid[a][b] is the H^a h^b coefficient.
using Bivar = std::vector<std::vector<Int>>;

Bivar bivar_zero(int n) {
    return Bivar(static_cast<size_t>(n) + 1,
                 std::vector<Int>(static_cast<size_t>(n) + 1));
}

// Multiply by (H + h), dropping anything above degree n in either variable.
Bivar times_h_plus_h(const Bivar& p, int n) {
    Bivar out = bivar_zero(n);
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            const Int& v = p[static_cast<size_t>(a)][static_cast<size_t>(b)];
            if (v == 0) continue;
            if (a + 1 <= n) out[static_cast<size_t>(a) + 1][static_cast<size_t>(b)] += v;
            if (b + 1 <= n) out[static_cast<size_t>(a)][static_cast<size_t>(b) + 1] += v;
        }
    return out;
}

}  // namespace

ConormalCycle::ConormalCycle(int ambient, std::vector<Int> bidegrees)
    : ambient_(ambient), bidegrees_(std::move(bidegrees)) {
    if (ambient_ < 0) throw ValidationError("ConormalCycle: ambient must be >= 0");
    if (bidegrees_.size() != static_cast<size_t>(ambient_))
        throw ValidationError("ConormalCycle: expected ambient entries");
}

ConormalCycle conormal_of(const ChowClass& unsigned_c, int dim) {
    check_supported(unsigned_c, dim, "conormal_of");
    const int n = unsigned_c.ambient();
    Bivar acc = bivar_zero(n);
    Bivar power = bivar_zero(n);
    power[0][0] = 1;
    for (int j = 0; j <= dim; ++j) {
        power = times_h_plus_h(power, n);  // (H+h)^(j+1)
        if (unsigned_c[j] == 0) continue;
        const Int scale = neg_one_pow(dim + j) * unsigned_c[j];
        // Shift by H^(n-j) while accumulating.
        for (int a = 0; a <= n; ++a) {
            if (a + n - j > n) break;
            for (int b = 0; b <= n; ++b) {
                const Int& v = power[static_cast<size_t>(a)][static_cast<size_t>(b)];
                if (v != 0)
                    acc[static_cast<size_t>(a + n - j)][static_cast<size_t>(b)] += scale * v;
            }
        }
    }
    std::vector<Int> deltas(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        deltas[static_cast<size_t>(k)] =
            acc[static_cast<size_t>(n - k)][static_cast<size_t>(k) + 1];
    return ConormalCycle(n, std::move(deltas));
}

ChowClass class_of_conormal(const ConormalCycle& cyc) {
    const int n = cyc.ambient();
    PascalTriangle pt(n);
    // delta_k = sum_{j>=k} C(j+1, k+1) c_j, solved from the top down;
    // the signed class is gamma_j = (-1)^j c_j.
    std::vector<Int> c(static_cast<size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        Int acc = cyc[k];
        for (int j = k + 1; j < n; ++j)
            acc -= pt.choose(j + 1, k + 1) * c[static_cast<size_t>(j)];
        c[static_cast<size_t>(k)] = std::move(acc);
    }
    std::vector<Int> gamma(static_cast<size_t>(n) + 1);
    for (int j = 0; j < n; ++j)
        gamma[static_cast<size_t>(j)] = neg_one_pow(j) * c[static_cast<size_t>(j)];
    return ChowClass(n, std::move(gamma));
}

Int ed_degree(const ChowClass& unsigned_c, int dim) {
    check_supported(unsigned_c, dim, "ed_degree");
    Int acc = 0;
    for (int j = 0; j <= dim; ++j)
        acc += neg_one_pow(dim + j) * unsigned_c[j] * (pow_int(2, static_cast<unsigned long>(j) + 1) - 1);
    return acc;
}

}  // namespace mather
