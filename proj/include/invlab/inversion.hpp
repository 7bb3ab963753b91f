#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "invlab/linalg.hpp"

namespace invlab {

enum class InverseMethod { RowsGepp, ColsGepp, GetriStyle, NewtonLeft, NewtonRight, Strassen };

/// CLI spelling: rows-gepp, cols-gepp, getri, newton-left, newton-right, strassen.
std::string_view to_string(InverseMethod m);
std::optional<InverseMethod> parse_inverse_method(std::string_view s);

struct InverseResult {
    Matrix v;
    InverseMethod method;
    int iterations = 0;  ///< 0 for direct methods
    bool converged = true;
};

/// Row i of V solves v_i A = e_i through one GEPP factorization of A, which
/// makes ||VA - I|| small.
InverseResult invert_rows_gepp(const Matrix& a);

/// Column j of V solves A v_j = e_j; small right residual ||AV - I||.
InverseResult invert_cols_gepp(const Matrix& a);

/// LAPACK xGETRI scheme: PA = LU, explicit U^{-1}, then X L = U^{-1} solved
/// column by column from the right, and V = X P.
InverseResult invert_getri_style(const Matrix& a);

struct NewtonOptions {
    double tol = 100.0;  ///< stop when the residual is <= tol * kappa_est * eps
    int max_iter = 100;
    /// Condition number used in the stopping rule. When absent it comes from
    /// a Jacobi SVD for small orders, else ||A|| ||V_t|| by power iteration.
    std::optional<double> kappa;
};

/// V <- (2I - VA) V. Converges to a left inverse when rho(I - V0 A) < 1.
InverseResult newton_left(const Matrix& a, const Matrix& v0, const NewtonOptions& opts = {});
InverseResult newton_left(const Matrix& a, const Matrix& v0, double tol, int max_iter);

/// V <- V (2I - AV). Converges to a right inverse.
InverseResult newton_right(const Matrix& a, const Matrix& v0, const NewtonOptions& opts = {});
InverseResult newton_right(const Matrix& a, const Matrix& v0, double tol, int max_iter);

/// A^T / (||A||_1 ||A||_inf). Both Newton iterations converge from this seed.
Matrix default_newton_seed(const Matrix& a);

/// Recursive 2x2 block inversion through the Schur complement of the leading
/// block. Order must be a power of two; orders <= 2 are inverted in closed
/// form. Throws SingularMatrix naming the recursion path (e.g. "A11/S") of
/// the block that could not be inverted.
InverseResult strassen_invert(const Matrix& a);

/// Dispatch with default settings (Newton methods start from
/// default_newton_seed).
InverseResult invert(const Matrix& a, InverseMethod method);

}  // namespace invlab
