#ifndef MATHER_CHOW_HPP
#define MATHER_CHOW_HPP

#include <string>
#include <vector>

#include "mather/arith.hpp"

namespace mather {

/*
 * A class in the Chow group of P^n, stored as integer multiples of the
 * fundamental classes [P^0], ..., [P^n] in dimension-ascending order:
 * coeffs()[j] multiplies [P^j]. Whether the class is a plain Chern-Mather
 * class or its signed variant is a caller-side convention; signed_class()
 * converts between the two given the dimension of the variety.
 */
class ChowClass {
public:
    ChowClass(int ambient, std::vector<Int> coeffs);
    static ChowClass zero(int ambient);

    int ambient() const { return ambient_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& operator[](int j) const { return coeffs_.at(static_cast<size_t>(j)); }

    bool is_zero() const;
    // True when the coefficient of [P^n] vanishes, i.e. the class can come
    // from a proper subvariety.
    bool is_proper() const;
    int top_dim() const;  // largest j with nonzero coefficient; -1 if zero

    ChowClass operator+(const ChowClass& rhs) const;
    ChowClass operator-(const ChowClass& rhs) const;
    ChowClass operator*(const Int& s) const;
    ChowClass operator-() const;
    bool operator==(const ChowClass& rhs) const = default;

private:
    int ambient_;
    std::vector<Int> coeffs_;
};

// Polynomial view q of a class on P^n: q_i is the coefficient of H^i, and
// the class is q(H) cap [P^n], so q_i equals the [P^(n-i)] coefficient.
class HPolyView {
public:
    HPolyView(int ambient, std::vector<Int> coeffs);

    int ambient() const { return ambient_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& operator[](int i) const { return coeffs_.at(static_cast<size_t>(i)); }

    bool is_zero() const;
    int order() const;  // lowest nonzero H-power; -1 if zero
    Int eval(const Int& x) const;

    bool operator==(const HPolyView& rhs) const = default;

private:
    int ambient_;
    std::vector<Int> coeffs_;
};

// Ranks a_0..a_{n-1} of a signed class on P^n (n entries).
class RankVector {
public:
    RankVector(int ambient, std::vector<Int> ranks);

    int ambient() const { return ambient_; }
    const std::vector<Int>& ranks() const { return ranks_; }
    const Int& operator[](int i) const { return ranks_.at(static_cast<size_t>(i)); }

    bool operator==(const RankVector& rhs) const = default;

private:
    int ambient_;
    std::vector<Int> ranks_;
};

// n x n integer matrix taking the first n coefficients of a signed class to
// its rank vector; it is an involution.
class ChernMatrix {
public:
    explicit ChernMatrix(int n);

    int size() const { return n_; }
    // 1-based indices, matching the usual matrix notation.
    const Int& at(int i, int j) const;

    RankVector apply(const ChowClass& signed_class) const;
    ChernMatrix multiply(const ChernMatrix& rhs) const;
    bool is_identity() const;

private:
    friend ChernMatrix chern_matrix(int n);
    Int& entry(int i, int j);
    int n_;
    std::vector<Int> entries_;
};

HPolyView poly_of_class(const ChowClass& c);
ChowClass class_of_poly(const HPolyView& q);

// Multiply by (-1)^dim; involutive, converts between a Chern-Mather class
// and its signed variant.
ChowClass signed_class(const ChowClass& c, int dim);

// Signed class of a k-plane in P^n: (-1)^k (1+H)^(k+1) H^(n-k) cap [P^n].
ChowClass pk_class(int k, int n);

// Ranks of a signed class: a_i = sum_{j>=i} C(j+1, i+1) (-1)^j alpha_j.
// Requires a proper class (alpha_n = 0).
RankVector ranks_of(const ChowClass& signed_c);

// Inverse of ranks_of: sum_i a_i * pk_class(i, n).
ChowClass class_of_ranks(const RankVector& a);

ChernMatrix chern_matrix(int n);

// Degree of the pairing of the dual basis element of index i against a
// class: the H^n coefficient of (-1)^i H^i (1+H)^-(i+2) q(H).
Int pair_dual_basis(int i, const ChowClass& c);

// Chern-Mather class of a nonsingular degree-d hypersurface in P^n:
// d H (1+H)^(n+1) / (1+dH) cap [P^n], expanded mod H^(n+1).
ChowClass smooth_hypersurface_class(int n, const Int& d);

// Display helpers used by the CLI ("3[P^2]+5[P^1]+[P^0]", "3H^2+5H^3+4H^4").
std::string format_class(const ChowClass& c);
std::string format_hpoly(const HPolyView& q);

}  // namespace mather

#endif
