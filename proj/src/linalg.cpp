#include "invlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace invlab {

namespace {

void require_square(const Matrix& a, const char* op) {
    if (!a.is_square()) {
        throw DimensionMismatch(std::string(op) + ": matrix is " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()) + ", expected square");
    }
}

void require_length(std::size_t n, const Vector& b, const char* op) {
    if (b.size() != n) {
        throw DimensionMismatch(std::string(op) + ": right-hand side has length " +
                                std::to_string(b.size()) + ", expected " + std::to_string(n));
    }
}

double dot_span(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("matmul: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    }
    Matrix c(a.rows(), b.cols());
    // i-k-j order streams rows of b and c.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ci = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            auto bk = b.row(k);
            for (std::size_t j = 0; j < ci.size(); ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

Vector matvec(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matvec: inner dimensions differ");
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot_span(a.row(i), x.values());
    return y;
}

Vector matvec_transposed(const Matrix& a, const Vector& x) {
    if (a.rows() != x.size()) throw DimensionMismatch("matvec_transposed: inner dimensions differ");
    Vector y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double xi = x[i];
        auto ai = a.row(i);
        for (std::size_t j = 0; j < ai.size(); ++j) y[j] += ai[j] * xi;
    }
    return y;
}

double dot(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw DimensionMismatch("dot: lengths differ");
    return dot_span(x.values(), y.values());
}

double norm2(const Vector& x) { return std::sqrt(dot_span(x.values(), x.values())); }

double norm2(const Matrix& a) {
    if (a.is_square() && a.rows() <= kNormSvdCutoff) {
        return svd_jacobi(a).sigma.front();
    }
    return norm2_power(a);
}

double norm2_power(const Matrix& a, double rel_tol, int max_iter) {
    // Fixed, sign-varying start vector keeps the estimate deterministic.
    Vector v(a.cols());
    for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(j) + 0.3);
    }
    double nv = norm2(v);
    for (double& x : v.values()) x /= nv;

    double sigma = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Vector w = matvec(a, v);
        const double s = norm2(w);
        if (s == 0.0) return sigma;
        Vector u = matvec_transposed(a, w);
        const double nu = norm2(u);
        if (nu == 0.0) return s;
        for (std::size_t j = 0; j < u.size(); ++j) v[j] = u[j] / nu;
        const bool settled = std::abs(s - sigma) <= rel_tol * s;
        sigma = s;
        if (settled) break;
    }
    return sigma;
}

double norm1(const Matrix& a) {
    std::vector<double> colsum(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto r = a.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) colsum[j] += std::abs(r[j]);
    }
    return *std::max_element(colsum.begin(), colsum.end());
}

double norm_inf(const Matrix& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (double x : a.row(i)) s += std::abs(x);
        m = std::max(m, s);
    }
    return m;
}

double norm_fro(const Matrix& a) { return std::sqrt(dot_span(a.values(), a.values())); }

// ---------------------------------------------------------------------------
// LU
// ---------------------------------------------------------------------------

Matrix LuFactors::lower() const {
    const std::size_t n = order();
    Matrix l = Matrix::identity(n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) l(i, j) = lu(i, j);
    return l;
}

Matrix LuFactors::upper() const {
    const std::size_t n = order();
    Matrix u(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) u(i, j) = lu(i, j);
    return u;
}

Matrix LuFactors::permutation() const {
    const std::size_t n = order();
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1.0;
    return p;
}

LuFactors lu_gepp(const Matrix& a) {
    require_square(a, "lu_gepp");
    const std::size_t n = a.rows();
    LuFactors f{a, std::vector<std::size_t>(n), norm2(a)};
    std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
    Matrix& m = f.lu;
    const double threshold = singular_tol(n) * f.anorm;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(m(i, k)) > best) {
                best = std::abs(m(i, k));
                p = i;
            }
        }
        if (!(best > threshold)) {
            throw SingularMatrix("lu_gepp: pivot " + std::to_string(best) + " at step " +
                                     std::to_string(k) + " is below " + std::to_string(threshold),
                                 "step " + std::to_string(k));
        }
        if (p != k) {
            std::swap_ranges(m.row(k).begin(), m.row(k).end(), m.row(p).begin());
            std::swap(f.perm[k], f.perm[p]);
        }
        const double pivot = m(k, k);
        auto rk = m.row(k);
        for (std::size_t i = k + 1; i < n; ++i) {
            auto ri = m.row(i);
            const double l = ri[k] / pivot;
            ri[k] = l;
            if (l == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) ri[j] -= l * rk[j];
        }
    }
    return f;
}

Vector solve_lu(const LuFactors& f, const Vector& b) {
    const std::size_t n = f.order();
    require_length(n, b, "solve_lu");
    const Matrix& m = f.lu;
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (std::size_t i = 1; i < n; ++i) {
        auto ri = m.row(i);
        double s = x[i];
        for (std::size_t j = 0; j < i; ++j) s -= ri[j] * x[j];
        x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
        auto ri = m.row(i);
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= ri[j] * x[j];
        x[i] = s / ri[i];
    }
    return x;
}

Vector solve_lu_transposed(const LuFactors& f, const Vector& b) {
    // A^T = U^T L^T P: solve U^T z = b, then L^T w = z, then y = P^T w.
    const std::size_t n = f.order();
    require_length(n, b, "solve_lu_transposed");
    const Matrix& m = f.lu;
    Vector z = b;
    for (std::size_t i = 0; i < n; ++i) {
        z[i] /= m(i, i);
        const double zi = z[i];
        auto ri = m.row(i);
        for (std::size_t j = i + 1; j < n; ++j) z[j] -= ri[j] * zi;
    }
    for (std::size_t i = n; i-- > 1;) {
        const double zi = z[i];
        auto ri = m.row(i);
        for (std::size_t j = 0; j < i; ++j) z[j] -= ri[j] * zi;
    }
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) y[f.perm[i]] = z[i];
    return y;
}

// ---------------------------------------------------------------------------
// QR
// ---------------------------------------------------------------------------

QrFactors qr_householder(const Matrix& a) {
    require_square(a, "qr_householder");
    const std::size_t n = a.rows();
    QrFactors f{a, std::vector<double>(n, 0.0), norm2(a)};
    Matrix& m = f.qr;

    for (std::size_t k = 0; k < n; ++k) {
        const double alpha = m(k, k);
        double tail = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) tail += m(i, k) * m(i, k);
        if (tail == 0.0) continue;  // H_k = I

        const double beta = -std::copysign(std::sqrt(alpha * alpha + tail), alpha);
        const double tau = (beta - alpha) / beta;
        const double scale = 1.0 / (alpha - beta);
        for (std::size_t i = k + 1; i < n; ++i) m(i, k) *= scale;
        m(k, k) = beta;
        f.tau[k] = tau;

        for (std::size_t j = k + 1; j < n; ++j) {
            double w = m(k, j);
            for (std::size_t i = k + 1; i < n; ++i) w += m(i, k) * m(i, j);
            w *= tau;
            m(k, j) -= w;
            for (std::size_t i = k + 1; i < n; ++i) m(i, j) -= w * m(i, k);
        }
    }
    return f;
}

Vector QrFactors::apply_qt(const Vector& b) const {
    const std::size_t n = order();
    require_length(n, b, "apply_qt");
    Vector y = b;
    for (std::size_t k = 0; k < n; ++k) {
        if (tau[k] == 0.0) continue;
        double w = y[k];
        for (std::size_t i = k + 1; i < n; ++i) w += qr(i, k) * y[i];
        w *= tau[k];
        y[k] -= w;
        for (std::size_t i = k + 1; i < n; ++i) y[i] -= w * qr(i, k);
    }
    return y;
}

Matrix QrFactors::q() const {
    const std::size_t n = order();
    Matrix q = Matrix::identity(n);
    // Q = H_0 ... H_{n-1}; accumulate right to left.
    for (std::size_t k = n; k-- > 0;) {
        if (tau[k] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            double w = q(k, j);
            for (std::size_t i = k + 1; i < n; ++i) w += qr(i, k) * q(i, j);
            w *= tau[k];
            q(k, j) -= w;
            for (std::size_t i = k + 1; i < n; ++i) q(i, j) -= w * qr(i, k);
        }
    }
    return q;
}

Matrix QrFactors::r() const {
    const std::size_t n = order();
    Matrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) r(i, j) = qr(i, j);
    return r;
}

Vector solve_qr(const QrFactors& f, const Vector& b) {
    const std::size_t n = f.order();
    require_length(n, b, "solve_qr");
    const double threshold = singular_tol(n) * f.anorm;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(std::abs(f.qr(i, i)) > threshold)) {
            throw SingularMatrix("solve_qr: |R(" + std::to_string(i) + "," + std::to_string(i) +
                                     ")| is below " + std::to_string(threshold),
                                 "diagonal " + std::to_string(i));
        }
    }
    Vector x = f.apply_qt(b);
    for (std::size_t i = n; i-- > 0;) {
        auto ri = f.qr.row(i);
        double s = x[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= ri[j] * x[j];
        x[i] = s / ri[i];
    }
    return x;
}

// ---------------------------------------------------------------------------
// SVD
// ---------------------------------------------------------------------------

Matrix SvdFactors::reconstruct() const {
    Matrix ls = l;
    for (std::size_t i = 0; i < ls.rows(); ++i)
        for (std::size_t j = 0; j < ls.cols(); ++j) ls(i, j) *= sigma[j];
    return matmul(ls, r.transpose());
}

SvdFactors svd_jacobi(const Matrix& a, const JacobiOptions& opts) {
    require_square(a, "svd_jacobi");
    const std::size_t n = a.rows();
    const double tol = std::sqrt(static_cast<double>(n)) * kUnitRoundoff;

    // Rows of w are the columns of A being orthogonalized; rows of v
    // accumulate the same rotations and end up as the columns of R.
    Matrix w = a.transpose();
    Matrix v = Matrix::identity(n);

    auto rotate = [n](Matrix& m, std::size_t p, std::size_t q, double c, double s) {
        auto mp = m.row(p);
        auto mq = m.row(q);
        for (std::size_t k = 0; k < n; ++k) {
            const double xp = mp[k];
            const double xq = mq[k];
            mp[k] = c * xp - s * xq;
            mq[k] = s * xp + c * xq;
        }
    };

    bool converged = (n == 1);
    double off = 0.0;
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        bool rotated = false;
        off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = dot_span(w.row(p), w.row(p));
                const double beta = dot_span(w.row(q), w.row(q));
                if (alpha == 0.0 || beta == 0.0) continue;
                const double gamma = dot_span(w.row(p), w.row(q));
                const double measure = std::abs(gamma) / std::sqrt(alpha * beta);
                off = std::max(off, measure);
                if (!(measure > tol)) continue;

                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t =
                    std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                rotate(w, p, q, c, s);
                rotate(v, p, q, c, s);
                rotated = true;
            }
        }
        converged = !rotated;
    }
    if (!converged) {
        throw NonConvergence("svd_jacobi: no convergence after " +
                                 std::to_string(opts.max_sweeps) + " sweeps, off-diagonal " +
                                 std::to_string(off),
                             off);
    }

    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i) norms[i] = std::sqrt(dot_span(w.row(i), w.row(i)));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    SvdFactors out{Matrix(n, n), std::vector<double>(n), Matrix(n, n)};
    std::vector<std::size_t> null_columns;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.sigma[k] = norms[src];
        auto wr = w.row(src);
        auto vr = v.row(src);
        for (std::size_t i = 0; i < n; ++i) out.r(i, k) = vr[i];
        if (norms[src] > 0.0) {
            for (std::size_t i = 0; i < n; ++i) out.l(i, k) = wr[i] / norms[src];
        } else {
            null_columns.push_back(k);
        }
    }

    // Zero singular values leave L underdetermined; complete it to an
    // orthonormal basis with Gram-Schmidt on the standard basis.
    std::size_t candidate = 0;
    for (std::size_t k : null_columns) {
        for (; candidate < n; ++candidate) {
            std::vector<double> e(n, 0.0);
            e[candidate] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == k) continue;
                    bool filled = out.sigma[j] > 0.0 ||
                                  std::find(null_columns.begin(), null_columns.end(), j) <
                                      std::find(null_columns.begin(), null_columns.end(), k);
                    if (!filled) continue;
                    double proj = 0.0;
                    for (std::size_t i = 0; i < n; ++i) proj += out.l(i, j) * e[i];
                    for (std::size_t i = 0; i < n; ++i) e[i] -= proj * out.l(i, j);
                }
            }
            double ne = 0.0;
            for (double x : e) ne += x * x;
            ne = std::sqrt(ne);
            if (ne > 0.5) {
                for (std::size_t i = 0; i < n; ++i) out.l(i, k) = e[i] / ne;
                ++candidate;
                break;
            }
        }
    }
    return out;
}

double cond2(const SvdFactors& s) {
    const double smallest = s.sigma.back();
    if (!(smallest > 0.0)) {
        throw SingularMatrix("cond2: smallest singular value is zero",
                             "sigma " + std::to_string(s.sigma.size() - 1));
    }
    return s.sigma.front() / smallest;
}

}  // namespace invlab
