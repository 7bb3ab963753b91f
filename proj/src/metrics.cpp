#include "invlab/metrics.hpp"

#include <cmath>
#include <string>

namespace invlab {

ResidualReport residuals(const Matrix& v, const Matrix& a, const std::optional<Matrix>& a_inv_ref) {
    if (!a.is_square() || v.rows() != a.rows() || v.cols() != a.cols()) {
        throw DimensionMismatch("residuals: V and A must be square of the same order");
    }
    ResidualReport r;
    r.left_residual = norm2(minus_identity(matmul(v, a)));
    r.right_residual = norm2(minus_identity(matmul(a, v)));
    if (a_inv_ref) {
        if (a_inv_ref->rows() != a.rows() || a_inv_ref->cols() != a.cols()) {
            throw DimensionMismatch("residuals: reference inverse has the wrong order");
        }
        r.gamma_rel = norm2(v - *a_inv_ref) / norm2(*a_inv_ref);
    }
    return r;
}

double forward_error(const Vector& x_hat, const Vector& x_ref) {
    if (x_hat.size() != x_ref.size()) throw DimensionMismatch("forward_error: lengths differ");
    const double ref = norm2(x_ref);
    if (!(ref > 0.0)) throw InvalidArgument("forward_error: reference solution is zero");
    return norm2(x_hat - x_ref) / ref;
}

double backward_error(const Matrix& a, double anorm, const Vector& x, const Vector& b) {
    if (a.cols() != x.size() || a.rows() != b.size()) {
        throw DimensionMismatch("backward_error: dimensions of A, x and b are inconsistent");
    }
    const double denom = anorm * norm2(x) + norm2(b);
    if (!(denom > 0.0)) throw InvalidArgument("backward_error: x and b are both zero");
    return norm2(matvec(a, x) - b) / denom;
}

double backward_error(const Matrix& a, const Vector& x, const Vector& b) {
    return backward_error(a, norm2(a), x, b);
}

SolveReport solve_report(const Matrix& a, const Vector& b, Vector x,
                         const std::optional<Vector>& x_ref) {
    SolveReport rep{std::move(x), std::nullopt, 0.0, 0.0};
    rep.residual_norm = norm2(matvec(a, rep.x_v) - b);
    rep.backward_error = backward_error(a, rep.x_v, b);
    if (x_ref) rep.forward_error_rel = forward_error(rep.x_v, *x_ref);
    return rep;
}

ProjectionSpectrum gamma_projection_spectrum(const Matrix& v, const Matrix& a_inv_ref,
                                             const SvdFactors& s, std::size_t row) {
    const std::size_t n = s.order();
    if (v.rows() != n || v.cols() != n || a_inv_ref.rows() != n || a_inv_ref.cols() != n) {
        throw DimensionMismatch("gamma_projection_spectrum: orders of V, A^{-1} and SVD differ");
    }
    if (row >= n) {
        throw InvalidArgument("gamma_projection_spectrum: row " + std::to_string(row) +
                              " out of range");
    }
    std::vector<double> gamma(n);
    for (std::size_t k = 0; k < n; ++k) gamma[k] = v(row, k) - a_inv_ref(row, k);

    ProjectionSpectrum out{row, s.sigma, std::vector<double>(n, 0.0)};
    for (std::size_t j = 0; j < n; ++j) {
        double p = 0.0;
        for (std::size_t k = 0; k < n; ++k) p += s.l(k, j) * gamma[k];
        out.magnitudes[j] = std::abs(p);
    }
    return out;
}

BoundComparison bound_comparison(double kappa, double observed) {
    if (!(kappa >= 1.0) || !std::isfinite(kappa)) {
        throw InvalidArgument("bound_comparison: kappa must be a finite value >= 1");
    }
    const double tight = kappa * kUnitRoundoff;
    return {kappa, kappa * tight, tight, observed};
}

}  // namespace invlab
