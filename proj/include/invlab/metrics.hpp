#pragma once

#include <optional>
#include <vector>

#include "invlab/linalg.hpp"

namespace invlab {

struct ResidualReport {
    double left_residual = 0.0;   ///< ||VA - I||_2
    double right_residual = 0.0;  ///< ||AV - I||_2
    /// ||V - A_ref^{-1}||_2 / ||A_ref^{-1}||_2, when a reference inverse is given.
    std::optional<double> gamma_rel;
};

struct SolveReport {
    Vector x_v;
    std::optional<double> forward_error_rel;
    double backward_error = 0.0;
    double residual_norm = 0.0;  ///< ||A x_v - b||_2
};

/// Magnitudes of the projections of one row of V - A^{-1} onto the left
/// singular vectors of A, paired with the singular values.
struct ProjectionSpectrum {
    std::size_t row_index = 0;
    std::vector<double> sigmas;
    std::vector<double> magnitudes;
};

/// The loose (kappa^2 eps) and tight (kappa eps) forward error bounds next to
/// an observed error.
struct BoundComparison {
    double kappa = 1.0;
    double loose_bound = 0.0;
    double tight_bound = 0.0;
    double observed_forward_error = 0.0;
};

ResidualReport residuals(const Matrix& v, const Matrix& a,
                         const std::optional<Matrix>& a_inv_ref = std::nullopt);

/// ||x_hat - x_ref||_2 / ||x_ref||_2
double forward_error(const Vector& x_hat, const Vector& x_ref);

/// Rigal-Gaches normwise backward error ||Ax - b|| / (||A|| ||x|| + ||b||),
/// 2-norms throughout.
double backward_error(const Matrix& a, const Vector& x, const Vector& b);

/// Same quantity with ||A||_2 supplied, for callers that already have it.
double backward_error(const Matrix& a, double anorm, const Vector& x, const Vector& b);

/// Fills the residual, backward error and (when x_ref is given) forward error
/// for a computed solution x.
SolveReport solve_report(const Matrix& a, const Vector& b, Vector x,
                         const std::optional<Vector>& x_ref = std::nullopt);

ProjectionSpectrum gamma_projection_spectrum(const Matrix& v, const Matrix& a_inv_ref,
                                             const SvdFactors& s, std::size_t row);

BoundComparison bound_comparison(double kappa, double observed);

}  // namespace invlab
