#pragma once

#include <cstddef>
#include <vector>

#include "invlab/matrix.hpp"

namespace invlab {

/// Dimension at or below which norm2 takes sigma_1 from a Jacobi SVD instead
/// of running power iteration.
inline constexpr std::size_t kNormSvdCutoff = 64;

/// Rank-decision threshold, relative to ||A||_2, for LU pivots and R diagonals.
inline double singular_tol(std::size_t n) { return static_cast<double>(n) * kUnitRoundoff; }

// ---------------------------------------------------------------------------
// Products and norms
// ---------------------------------------------------------------------------

Matrix matmul(const Matrix& a, const Matrix& b);
Vector matvec(const Matrix& a, const Vector& x);
/// a^T x without forming the transpose.
Vector matvec_transposed(const Matrix& a, const Vector& x);

double dot(const Vector& x, const Vector& y);
double norm2(const Vector& x);

/// Spectral norm. Exact sigma_1 via Jacobi SVD for square matrices of order
/// <= kNormSvdCutoff, power iteration on A^T A otherwise.
double norm2(const Matrix& a);
double norm2_power(const Matrix& a, double rel_tol = 1e-6, int max_iter = 200);
double norm1(const Matrix& a);
double norm_inf(const Matrix& a);
double norm_fro(const Matrix& a);

// ---------------------------------------------------------------------------
// LU with partial pivoting
// ---------------------------------------------------------------------------

struct LuFactors {
    Matrix lu;                      ///< unit-lower L below the diagonal, U on and above
    std::vector<std::size_t> perm;  ///< row i of PA is row perm[i] of A
    double anorm = 0.0;             ///< ||A||_2 at factorization time

    std::size_t order() const noexcept { return lu.rows(); }
    Matrix lower() const;
    Matrix upper() const;
    Matrix permutation() const;
};

/// GEPP. The pivot is the first entry of maximal magnitude in the column.
/// Throws SingularMatrix when a pivot is <= n*eps*||A||_2.
LuFactors lu_gepp(const Matrix& a);
/// Solves A x = b.
Vector solve_lu(const LuFactors& f, const Vector& b);
/// Solves A^T y = b with the factors of A.
Vector solve_lu_transposed(const LuFactors& f, const Vector& b);

// ---------------------------------------------------------------------------
// Householder QR
// ---------------------------------------------------------------------------

/// A = QR with Q = H_0 H_1 ... H_{n-1}, H_k = I - tau_k v_k v_k^T, v_k(k) = 1.
/// The essential part of v_k lives below the diagonal of `qr`.
struct QrFactors {
    Matrix qr;
    std::vector<double> tau;
    double anorm = 0.0;

    std::size_t order() const noexcept { return qr.rows(); }
    Matrix q() const;
    Matrix r() const;
    /// Q^T b
    Vector apply_qt(const Vector& b) const;
};

QrFactors qr_householder(const Matrix& a);
/// x = R^{-1} Q^T b. Throws SingularMatrix for a negligible diagonal of R.
Vector solve_qr(const QrFactors& f, const Vector& b);

// ---------------------------------------------------------------------------
// One-sided Jacobi SVD
// ---------------------------------------------------------------------------

/// A = L diag(sigma) R^T, sigma nonincreasing.
struct SvdFactors {
    Matrix l;
    std::vector<double> sigma;
    Matrix r;

    std::size_t order() const noexcept { return sigma.size(); }
    Matrix reconstruct() const;
};

struct JacobiOptions {
    int max_sweeps = 30;
};

/// Hestenes one-sided Jacobi with cyclic-by-row pair ordering. A pair (p, q)
/// is rotated while |a_p . a_q| > sqrt(n) eps ||a_p|| ||a_q||; throws
/// NonConvergence if any pair still needs rotation after max_sweeps.
SvdFactors svd_jacobi(const Matrix& a, const JacobiOptions& opts = {});

/// sigma_1 / sigma_n
double cond2(const SvdFactors& s);

}  // namespace invlab
