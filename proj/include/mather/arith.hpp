#ifndef MATHER_ARITH_HPP
#define MATHER_ARITH_HPP

#include <gmpxx.h>

#include <vector>

namespace mather {

using Int = mpz_class;
using Rat = mpq_class;

// binomial(n, k) by the Pascal recurrence; 0 outside 0 <= k <= n.
Int binomial(long n, long k);

// Rows 0..max_n of Pascal's triangle, built once and read many times.
class PascalTriangle {
public:
    explicit PascalTriangle(int max_n);
    // choose(n, k) = C(n, k); 0 outside the triangle. Requires n <= max_n.
    const Int& choose(int n, int k) const;

private:
    std::vector<std::vector<Int>> rows_;
    Int zero_{0};
};

inline int neg_one_pow(long k) { return (k % 2 == 0) ? 1 : -1; }

// base^e with 0^0 = 1.
Int pow_int(const Int& base, unsigned long e);

}  // namespace mather

#endif
