#pragma once

// Exact rational arithmetic for small integer matrices. Test-only: gives
// reference inverses and solutions that do not share any code path with the
// floating-point kernels.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using i128 = __int128;

inline i128 iabs(i128 x) { return x < 0 ? -x : x; }

inline i128 gcd(i128 a, i128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

class Rational {
public:
    Rational(std::int64_t n = 0) : num_(n), den_(1) {}
    Rational(i128 n, i128 d) : num_(n), den_(d) {
        if (den_ == 0) throw std::domain_error("zero denominator");
        normalize();
    }

    Rational operator+(const Rational& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
    Rational operator-(const Rational& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
    Rational operator*(const Rational& o) const { return {num_ * o.num_, den_ * o.den_}; }
    Rational operator/(const Rational& o) const { return {num_ * o.den_, den_ * o.num_}; }
    bool is_zero() const { return num_ == 0; }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const i128 g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    i128 num_;
    i128 den_;
};

using RMatrix = std::vector<std::vector<Rational>>;

inline RMatrix from_ints(const std::vector<std::vector<std::int64_t>>& a) {
    RMatrix m;
    for (const auto& row : a) m.emplace_back(row.begin(), row.end());
    return m;
}

/// Gauss-Jordan on [A | I]; nullopt when A is singular.
inline std::optional<RMatrix> inverse(RMatrix a) {
    const std::size_t n = a.size();
    RMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[k]);
        std::swap(inv[p], inv[k]);
        const Rational piv = a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] = a[k][j] / piv;
            inv[k][j] = inv[k][j] / piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            const Rational f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - f * a[k][j];
                inv[i][j] = inv[i][j] - f * inv[k][j];
            }
        }
    }
    return inv;
}

inline std::vector<Rational> apply(const RMatrix& m, const std::vector<Rational>& x) {
    std::vector<Rational> y(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] = y[i] + m[i][j] * x[j];
    return y;
}

inline RMatrix multiply(const RMatrix& a, const RMatrix& b) {
    RMatrix c(a.size(), std::vector<Rational>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    return c;
}

}  // namespace oracle
