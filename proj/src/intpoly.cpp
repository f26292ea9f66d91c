#include "mather/intpoly.hpp"

#include "mather/errors.hpp"

namespace mather {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(int k, Int c) {
    if (k < 0) throw ValidationError("IntPoly::monomial: negative exponent");
    if (c == 0) return IntPoly();
    std::vector<Int> v(static_cast<size_t>(k) + 1);
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::one_plus_h_pow(int k, int max_deg) {
    if (k < 0) throw ValidationError("IntPoly::one_plus_h_pow: negative exponent");
    const int top = std::min(k, max_deg);
    if (top < 0) return IntPoly();
    std::vector<Int> v(static_cast<size_t>(top) + 1);
    v[0] = 1;
    for (int i = 1; i <= top; ++i)
        v[static_cast<size_t>(i)] = v[static_cast<size_t>(i) - 1] * (k - i + 1) / i;
    return IntPoly(std::move(v));
}

int IntPoly::degree() const { return static_cast<int>(c_.size()) - 1; }

int IntPoly::order() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

Int IntPoly::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return Int(0);
    return c_[static_cast<size_t>(i)];
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPoly IntPoly::truncated(int max_deg) const {
    if (max_deg < 0) return IntPoly();
    if (degree() <= max_deg) return *this;
    std::vector<Int> v(c_.begin(), c_.begin() + max_deg + 1);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(int k) const {
    if (k < 0) throw ValidationError("IntPoly::shifted: negative shift");
    if (is_zero()) return IntPoly();
    std::vector<Int> v(static_cast<size_t>(k), Int(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::divided_by_h_pow(int k) const {
    if (k < 0) throw ValidationError("IntPoly::divided_by_h_pow: negative power");
    if (is_zero()) return IntPoly();
    if (order() < k)
        throw ValidationError("IntPoly::divided_by_h_pow: not divisible");
    std::vector<Int> v(c_.begin() + k, c_.end());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::mul_trunc(const IntPoly& rhs, int max_deg) const {
    if (is_zero() || rhs.is_zero() || max_deg < 0) return IntPoly();
    std::vector<Int> v(static_cast<size_t>(
                           std::min(max_deg, degree() + rhs.degree())) + 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < rhs.c_.size() && i + j < v.size(); ++j)
            v[i + j] += c_[i] * rhs.c_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::inverse_trunc(int max_deg) const {
    if (coeff(0) != 1 && coeff(0) != -1)
        throw ValidationError("IntPoly::inverse_trunc: constant term must be +-1");
    if (max_deg < 0) return IntPoly();
    const Int u = coeff(0);  // self-inverse since u = +-1
    std::vector<Int> b(static_cast<size_t>(max_deg) + 1);
    b[0] = u;
    for (int m = 1; m <= max_deg; ++m) {
        Int acc = 0;
        for (int t = 1; t <= m; ++t) acc += coeff(t) * b[static_cast<size_t>(m - t)];
        b[static_cast<size_t>(m)] = -u * acc;
    }
    return IntPoly(std::move(b));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<Int> v(std::max(c_.size(), rhs.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const { return *this + (-rhs); }

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPoly();
    return mul_trunc(rhs, degree() + rhs.degree());
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return IntPoly(std::move(v));
}

}  // namespace mather
