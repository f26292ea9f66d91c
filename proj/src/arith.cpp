#include "mather/arith.hpp"

#include "mather/errors.hpp"

namespace mather {

Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<Int> row(static_cast<size_t>(n) + 1);
    row[0] = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = i; j >= 1; --j) row[j] += row[j - 1];
    return row[static_cast<size_t>(k)];
}

PascalTriangle::PascalTriangle(int max_n) {
    if (max_n < 0) throw ValidationError("PascalTriangle: max_n must be >= 0");
    rows_.resize(static_cast<size_t>(max_n) + 1);
    rows_[0] = {Int(1)};
    for (int n = 1; n <= max_n; ++n) {
        auto& row = rows_[static_cast<size_t>(n)];
        const auto& prev = rows_[static_cast<size_t>(n) - 1];
        row.resize(static_cast<size_t>(n) + 1);
        row[0] = 1;
        row[static_cast<size_t>(n)] = 1;
        for (int k = 1; k < n; ++k)
            row[static_cast<size_t>(k)] =
                prev[static_cast<size_t>(k) - 1] + prev[static_cast<size_t>(k)];
    }
}

const Int& PascalTriangle::choose(int n, int k) const {
    if (n < 0 || k < 0 || k > n) return zero_;
    const auto& row = rows_.at(static_cast<size_t>(n));
    return row[static_cast<size_t>(k)];
}

Int pow_int(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

}  // namespace mather
