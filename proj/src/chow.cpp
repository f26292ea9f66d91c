#include "mather/chow.hpp"

#include <sstream>

#include "mather/errors.hpp"
#include "mather/intpoly.hpp"

namespace mather {

namespace {

void check_ambient(int ambient) {
    if (ambient < 0) throw ValidationError("ambient dimension must be >= 0");
}

void check_size(int ambient, size_t size, const char* what) {
    if (size != static_cast<size_t>(ambient) + 1)
        throw ValidationError(std::string(what) + ": expected ambient+1 coefficients");
}

}  // namespace

ChowClass::ChowClass(int ambient, std::vector<Int> coeffs)
    : ambient_(ambient), coeffs_(std::move(coeffs)) {
    check_ambient(ambient_);
    check_size(ambient_, coeffs_.size(), "ChowClass");
}

ChowClass ChowClass::zero(int ambient) {
    check_ambient(ambient);
    return ChowClass(ambient, std::vector<Int>(static_cast<size_t>(ambient) + 1));
}

bool ChowClass::is_zero() const { return top_dim() < 0; }

bool ChowClass::is_proper() const { return coeffs_.back() == 0; }

int ChowClass::top_dim() const {
    for (size_t j = coeffs_.size(); j-- > 0;)
        if (coeffs_[j] != 0) return static_cast<int>(j);
    return -1;
}

ChowClass ChowClass::operator+(const ChowClass& rhs) const {
    if (ambient_ != rhs.ambient_)
        throw ValidationError("ChowClass: ambient mismatch in +");
    std::vector<Int> v(coeffs_.size());
    for (size_t j = 0; j < v.size(); ++j) v[j] = coeffs_[j] + rhs.coeffs_[j];
    return ChowClass(ambient_, std::move(v));
}

ChowClass ChowClass::operator-(const ChowClass& rhs) const { return *this + (-rhs); }

ChowClass ChowClass::operator*(const Int& s) const {
    std::vector<Int> v(coeffs_.size());
    for (size_t j = 0; j < v.size(); ++j) v[j] = coeffs_[j] * s;
    return ChowClass(ambient_, std::move(v));
}

ChowClass ChowClass::operator-() const { return *this * Int(-1); }

HPolyView::HPolyView(int ambient, std::vector<Int> coeffs)
    : ambient_(ambient), coeffs_(std::move(coeffs)) {
    check_ambient(ambient_);
    check_size(ambient_, coeffs_.size(), "HPolyView");
}

bool HPolyView::is_zero() const { return order() < 0; }

int HPolyView::order() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

Int HPolyView::eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

RankVector::RankVector(int ambient, std::vector<Int> ranks)
    : ambient_(ambient), ranks_(std::move(ranks)) {
    check_ambient(ambient_);
    if (ranks_.size() != static_cast<size_t>(ambient_))
        throw ValidationError("RankVector: expected ambient entries");
}

HPolyView poly_of_class(const ChowClass& c) {
    const int n = c.ambient();
    std::vector<Int> q(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) q[static_cast<size_t>(n - j)] = c[j];
    return HPolyView(n, std::move(q));
}

ChowClass class_of_poly(const HPolyView& q) {
    const int n = q.ambient();
    std::vector<Int> a(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) a[static_cast<size_t>(n - i)] = q[i];
    return ChowClass(n, std::move(a));
}

ChowClass signed_class(const ChowClass& c, int dim) {
    if (dim < 0 || dim > c.ambient())
        throw ValidationError("signed_class: dim out of range");
    return dim % 2 == 0 ? c : -c;
}

ChowClass pk_class(int k, int n) {
    check_ambient(n);
    if (k < 0 || k > n) throw ValidationError("pk_class: k out of range");
    std::vector<Int> a(static_cast<size_t>(n) + 1);
    PascalTriangle pt(k + 1);
    for (int j = 0; j <= k; ++j)
        a[static_cast<size_t>(j)] = neg_one_pow(k) * pt.choose(k + 1, j + 1);
    return ChowClass(n, std::move(a));
}

RankVector ranks_of(const ChowClass& signed_c) {
    if (!signed_c.is_proper())
        throw NonProperClass("ranks_of: class has a nonzero [P^n] coefficient");
    const int n = signed_c.ambient();
    PascalTriangle pt(n);
    std::vector<Int> a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Int acc = 0;
        for (int j = i; j < n; ++j)
            acc += pt.choose(j + 1, i + 1) * neg_one_pow(j) * signed_c[j];
        a[static_cast<size_t>(i)] = acc;
    }
    return RankVector(n, std::move(a));
}

ChowClass class_of_ranks(const RankVector& a) {
    const int n = a.ambient();
    ChowClass acc = ChowClass::zero(n);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        acc = acc + pk_class(i, n) * a[i];
    }
    return acc;
}

ChernMatrix::ChernMatrix(int n) : n_(n) {
    if (n < 1) throw ValidationError("ChernMatrix: n must be >= 1");
    entries_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), Int(0));
}

const Int& ChernMatrix::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
        throw ValidationError("ChernMatrix::at: index out of range");
    return entries_[static_cast<size_t>(i - 1) * static_cast<size_t>(n_) +
                    static_cast<size_t>(j - 1)];
}

Int& ChernMatrix::entry(int i, int j) {
    return entries_[static_cast<size_t>(i - 1) * static_cast<size_t>(n_) +
                    static_cast<size_t>(j - 1)];
}

RankVector ChernMatrix::apply(const ChowClass& signed_class) const {
    if (signed_class.ambient() != n_)
        throw ValidationError("ChernMatrix::apply: ambient mismatch");
    if (!signed_class.is_proper())
        throw NonProperClass("ChernMatrix::apply: class has a nonzero [P^n] coefficient");
    std::vector<Int> out(static_cast<size_t>(n_));
    for (int i = 1; i <= n_; ++i) {
        Int acc = 0;
        for (int j = 1; j <= n_; ++j) acc += at(i, j) * signed_class[j - 1];
        out[static_cast<size_t>(i - 1)] = acc;
    }
    return RankVector(n_, std::move(out));
}

ChernMatrix ChernMatrix::multiply(const ChernMatrix& rhs) const {
    if (rhs.n_ != n_) throw ValidationError("ChernMatrix::multiply: size mismatch");
    ChernMatrix out(n_);
    for (int i = 1; i <= n_; ++i)
        for (int k = 1; k <= n_; ++k) {
            const Int& left = at(i, k);
            if (left == 0) continue;
            for (int j = 1; j <= n_; ++j) out.entry(i, j) += left * rhs.at(k, j);
        }
    return out;
}

bool ChernMatrix::is_identity() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

ChernMatrix chern_matrix(int n) {
    ChernMatrix m(n);
    PascalTriangle pt(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.entry(i, j) = neg_one_pow(j - 1) * pt.choose(j, i);
    return m;
}

Int pair_dual_basis(int i, const ChowClass& c) {
    const int n = c.ambient();
    if (i < 0 || i > n) throw ValidationError("pair_dual_basis: i out of range");
    const IntPoly inv = IntPoly::one_plus_h_pow(i + 2, n).inverse_trunc(n);
    const IntPoly q(poly_of_class(c).coeffs());
    // (-1)^i H^i (1+H)^-(i+2) q(H), read off the H^n coefficient.
    return Int(neg_one_pow(i) * inv.mul_trunc(q, n - i).coeff(n - i));
}

ChowClass smooth_hypersurface_class(int n, const Int& d) {
    check_ambient(n);
    if (n < 1) throw ValidationError("smooth_hypersurface_class: n must be >= 1");
    if (d < 1) throw ValidationError("smooth_hypersurface_class: d must be >= 1");
    const IntPoly numer =
        (IntPoly::one_plus_h_pow(n + 1, n) * d).shifted(1).truncated(n);
    const IntPoly denom_inv = IntPoly(std::vector<Int>{Int(1), d}).inverse_trunc(n);
    const IntPoly q = numer.mul_trunc(denom_inv, n);
    std::vector<Int> coeffs(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) coeffs[static_cast<size_t>(i)] = q.coeff(i);
    return class_of_poly(HPolyView(n, std::move(coeffs)));
}

std::string format_class(const ChowClass& c) {
    if (c.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = c.ambient(); j >= 0; --j) {
        const Int& v = c[j];
        if (v == 0) continue;
        if (!first) os << (v > 0 ? "+" : "-");
        else if (v < 0) os << "-";
        first = false;
        Int av = abs(v);
        if (av != 1) os << av.get_str();
        os << "[P^" << j << "]";
    }
    return os.str();
}

std::string format_hpoly(const HPolyView& q) {
    if (q.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= q.ambient(); ++i) {
        const Int& v = q[i];
        if (v == 0) continue;
        if (!first) os << (v > 0 ? "+" : "-");
        else if (v < 0) os << "-";
        first = false;
        Int av = abs(v);
        if (av != 1 || i == 0) os << av.get_str();
        if (i >= 1) {
            os << "H";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace mather
