#ifndef MATHER_INTPOLY_HPP
#define MATHER_INTPOLY_HPP

#include <vector>

#include "mather/arith.hpp"

namespace mather {

/*
 * Dense univariate polynomial over Z, coefficients ascending.
 * Everything downstream works modulo H^(n+1) for some ambient n, so the
 * truncating variants are the workhorses. Inversion stays integral because
 * the only units we ever invert have constant term +-1.
 */
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return monomial(0); }
    static IntPoly monomial(int k, Int c = Int(1));
    // (1+H)^k mod H^(max_deg+1), k >= 0.
    static IntPoly one_plus_h_pow(int k, int max_deg);

    int degree() const;  // -1 for the zero polynomial
    int order() const;   // lowest nonzero exponent; -1 for zero
    Int coeff(int i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Int eval(const Int& x) const;

    IntPoly truncated(int max_deg) const;
    IntPoly shifted(int k) const;  // multiply by H^k
    // Exact division by H^k; requires order() >= k or zero.
    IntPoly divided_by_h_pow(int k) const;
    IntPoly mul_trunc(const IntPoly& rhs, int max_deg) const;
    // Multiplicative inverse mod H^(max_deg+1); constant term must be +-1.
    IntPoly inverse_trunc(int max_deg) const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& rhs) const { return c_ == rhs.c_; }

private:
    void trim();
    std::vector<Int> c_;
};

}  // namespace mather

#endif
