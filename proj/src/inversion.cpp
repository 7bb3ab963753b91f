#include "invlab/inversion.hpp"

#include <array>
#include <bit>
#include <cmath>

namespace invlab {

namespace {

constexpr std::array<std::pair<InverseMethod, std::string_view>, 6> kMethodNames{{
    {InverseMethod::RowsGepp, "rows-gepp"},
    {InverseMethod::ColsGepp, "cols-gepp"},
    {InverseMethod::GetriStyle, "getri"},
    {InverseMethod::NewtonLeft, "newton-left"},
    {InverseMethod::NewtonRight, "newton-right"},
    {InverseMethod::Strassen, "strassen"},
}};

void require_square(const Matrix& a, const char* op) {
    if (!a.is_square()) throw DimensionMismatch(std::string(op) + ": matrix is not square");
}

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector e(n);
    e[i] = 1.0;
    return e;
}

// ---------------------------------------------------------------------------
// Newton-Schulz
// ---------------------------------------------------------------------------

enum class Side { Left, Right };

InverseResult newton(const Matrix& a, const Matrix& v0, const NewtonOptions& opts, Side side) {
    require_square(a, "newton");
    if (v0.rows() != a.rows() || v0.cols() != a.cols()) {
        throw DimensionMismatch("newton: seed order does not match matrix");
    }
    const InverseMethod tag =
        side == Side::Left ? InverseMethod::NewtonLeft : InverseMethod::NewtonRight;

    std::optional<double> kappa = opts.kappa;
    double anorm = 0.0;
    if (!kappa) {
        if (a.rows() <= kNormSvdCutoff) {
            const SvdFactors s = svd_jacobi(a);
            if (s.sigma.back() > 0.0) kappa = cond2(s);
            anorm = s.sigma.front();
        } else {
            anorm = norm2(a);
        }
    }

    auto product = [&](const Matrix& v) { return side == Side::Left ? matmul(v, a) : matmul(a, v); };

    InverseResult out{v0, tag, 0, false};
    Matrix m = product(out.v);
    for (int t = 1; t <= opts.max_iter; ++t) {
        // (2I - M) V = 2V - M V on the left, V (2I - M) = 2V - V M on the right.
        Matrix correction = side == Side::Left ? matmul(m, out.v) : matmul(out.v, m);
        out.v = 2.0 * out.v - correction;
        m = product(out.v);
        out.iterations = t;

        const double residual = norm2(minus_identity(m));
        if (!std::isfinite(residual)) break;
        const double k = kappa ? *kappa : anorm * norm2(out.v);
        if (residual <= opts.tol * k * kUnitRoundoff) {
            out.converged = true;
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Strassen
// ---------------------------------------------------------------------------

Matrix block(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t h) {
    Matrix b(h, h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) b(i, j) = a(r0 + i, c0 + j);
    return b;
}

void place(Matrix& dst, const Matrix& b, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) dst(r0 + i, c0 + j) = b(i, j);
}

[[noreturn]] void singular_block(const std::string& path, const std::string& detail) {
    const std::string where = path.empty() ? "A" : path;
    throw SingularMatrix("strassen_invert: block " + where + " is singular (" + detail + ")",
                         where);
}

Matrix strassen_rec(const Matrix& a, const std::string& path) {
    const std::size_t n = a.rows();
    if (n == 1) {
        if (a(0, 0) == 0.0) singular_block(path, "zero scalar");
        return Matrix{{1.0 / a(0, 0)}};
    }
    if (n == 2) {
        const double ad = a(0, 0) * a(1, 1);
        const double bc = a(0, 1) * a(1, 0);
        const double det = ad - bc;
        if (!(std::abs(det) > 4.0 * kUnitRoundoff * (std::abs(ad) + std::abs(bc)))) {
            singular_block(path, "determinant " + std::to_string(det));
        }
        return Matrix{{a(1, 1) / det, -a(0, 1) / det}, {-a(1, 0) / det, a(0, 0) / det}};
    }

    const std::size_t h = n / 2;
    const std::string sep = path.empty() ? "" : "/";
    const Matrix a11 = block(a, 0, 0, h);
    const Matrix a12 = block(a, 0, h, h);
    const Matrix a21 = block(a, h, 0, h);
    const Matrix a22 = block(a, h, h, h);

    const Matrix r1 = strassen_rec(a11, path + sep + "A11");
    const Matrix r2 = matmul(a21, r1);
    const Matrix r3 = matmul(r1, a12);
    const Matrix r4 = matmul(a21, r3);
    const Matrix r5 = r4 - a22;  // minus the Schur complement
    const Matrix r6 = strassen_rec(r5, path + sep + "S");
    const Matrix c12 = matmul(r3, r6);
    const Matrix c21 = matmul(r6, r2);
    const Matrix r7 = matmul(r3, c21);

    Matrix c(n, n);
    place(c, r1 - r7, 0, 0);
    place(c, c12, 0, h);
    place(c, c21, h, 0);
    place(c, -1.0 * r6, h, h);
    return c;
}

}  // namespace

std::string_view to_string(InverseMethod m) {
    for (const auto& [tag, name] : kMethodNames)
        if (tag == m) return name;
    return "unknown";
}

std::optional<InverseMethod> parse_inverse_method(std::string_view s) {
    for (const auto& [tag, name] : kMethodNames)
        if (name == s) return tag;
    return std::nullopt;
}

InverseResult invert_rows_gepp(const Matrix& a) {
    require_square(a, "invert_rows_gepp");
    const std::size_t n = a.rows();
    const LuFactors f = lu_gepp(a);
    Matrix v(n, n);
    for (std::size_t i = 0; i < n; ++i) v.set_row(i, solve_lu_transposed(f, unit_vector(n, i)));
    return {std::move(v), InverseMethod::RowsGepp, 0, true};
}

InverseResult invert_cols_gepp(const Matrix& a) {
    require_square(a, "invert_cols_gepp");
    const std::size_t n = a.rows();
    const LuFactors f = lu_gepp(a);
    Matrix v(n, n);
    for (std::size_t j = 0; j < n; ++j) v.set_column(j, solve_lu(f, unit_vector(n, j)));
    return {std::move(v), InverseMethod::ColsGepp, 0, true};
}

InverseResult invert_getri_style(const Matrix& a) {
    require_square(a, "invert_getri_style");
    const std::size_t n = a.rows();
    const LuFactors f = lu_gepp(a);
    const Matrix& lu = f.lu;

    // U^{-1}, column by column.
    Matrix x(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        x(j, j) = 1.0 / lu(j, j);
        for (std::size_t i = j; i-- > 0;) {
            double s = 0.0;
            for (std::size_t k = i + 1; k <= j; ++k) s += lu(i, k) * x(k, j);
            x(i, j) = -s / lu(i, i);
        }
    }

    // X L = U^{-1}: L is unit lower, so X(:,j) = U^{-1}(:,j) - sum_{k>j} X(:,k) L(k,j).
    for (std::size_t j = n; j-- > 0;) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = x(i, j);
            for (std::size_t k = j + 1; k < n; ++k) s -= x(i, k) * lu(k, j);
            x(i, j) = s;
        }
    }

    // A^{-1} = (PA)^{-1} P: column i of X lands in column perm[i].
    Matrix v(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n; ++r) v(r, f.perm[i]) = x(r, i);
    return {std::move(v), InverseMethod::GetriStyle, 0, true};
}

InverseResult newton_left(const Matrix& a, const Matrix& v0, const NewtonOptions& opts) {
    return newton(a, v0, opts, Side::Left);
}

InverseResult newton_left(const Matrix& a, const Matrix& v0, double tol, int max_iter) {
    return newton(a, v0, NewtonOptions{tol, max_iter, std::nullopt}, Side::Left);
}

InverseResult newton_right(const Matrix& a, const Matrix& v0, const NewtonOptions& opts) {
    return newton(a, v0, opts, Side::Right);
}

InverseResult newton_right(const Matrix& a, const Matrix& v0, double tol, int max_iter) {
    return newton(a, v0, NewtonOptions{tol, max_iter, std::nullopt}, Side::Right);
}

Matrix default_newton_seed(const Matrix& a) {
    const double scale = norm1(a) * norm_inf(a);
    if (!(scale > 0.0)) throw InvalidArgument("default_newton_seed: zero matrix");
    return (1.0 / scale) * a.transpose();
}

InverseResult strassen_invert(const Matrix& a) {
    require_square(a, "strassen_invert");
    if (!std::has_single_bit(a.rows())) {
        throw InvalidArgument("strassen_invert: order " + std::to_string(a.rows()) +
                              " is not a power of two");
    }
    return {strassen_rec(a, ""), InverseMethod::Strassen, 0, true};
}

InverseResult invert(const Matrix& a, InverseMethod method) {
    switch (method) {
        case InverseMethod::RowsGepp: return invert_rows_gepp(a);
        case InverseMethod::ColsGepp: return invert_cols_gepp(a);
        case InverseMethod::GetriStyle: return invert_getri_style(a);
        case InverseMethod::NewtonLeft: return newton_left(a, default_newton_seed(a));
        case InverseMethod::NewtonRight: return newton_right(a, default_newton_seed(a));
        case InverseMethod::Strassen: return strassen_invert(a);
    }
    throw InvalidArgument("invert: unknown method");
}

}  // namespace invlab
