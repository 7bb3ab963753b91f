#pragma once

#include <cstdint>
#include <vector>

#include "invlab/linalg.hpp"
#include "invlab/rng.hpp"
#include "rational_oracle.hpp"

namespace testing_support {

using invlab::Matrix;
using invlab::Vector;

inline constexpr double eps = invlab::kUnitRoundoff;

inline Matrix to_matrix(const oracle::RMatrix& r) {
    Matrix m(r.size(), r[0].size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[0].size(); ++j) m(i, j) = r[i][j].to_double();
    return m;
}

inline Vector to_vector(const std::vector<oracle::Rational>& r) {
    Vector v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = r[i].to_double();
    return v;
}

inline std::vector<std::vector<std::int64_t>> random_int_entries(invlab::Rng& rng, std::size_t n,
                                                                 int lo, int hi) {
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    for (auto& row : a)
        for (auto& x : row) x = lo + static_cast<std::int64_t>(rng.next() % span);
    return a;
}

inline Matrix int_matrix(const std::vector<std::vector<std::int64_t>>& a) {
    Matrix m(a.size(), a[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) m(i, j) = static_cast<double>(a[i][j]);
    return m;
}

inline Matrix gaussian_matrix(std::size_t n, invlab::Rng& rng) {
    Matrix m(n, n);
    for (double& x : m.values()) x = rng.gaussian();
    return m;
}

inline Vector gaussian_vector(std::size_t n, invlab::Rng& rng) {
    Vector v(n);
    for (double& x : v.values()) x = rng.gaussian();
    return v;
}

inline double rel_error(const Matrix& x, const Matrix& ref) {
    return invlab::norm2(x - ref) / invlab::norm2(ref);
}

inline double rel_error(const Vector& x, const Vector& ref) {
    return invlab::norm2(x - ref) / invlab::norm2(ref);
}

inline double max_abs_diff(const Matrix& x, const Matrix& y) {
    double m = 0.0;
    for (std::size_t k = 0; k < x.values().size(); ++k)
        m = std::max(m, std::abs(x.values()[k] - y.values()[k]));
    return m;
}

}  // namespace testing_support
