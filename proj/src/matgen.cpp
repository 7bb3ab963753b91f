#include "invlab/matgen.hpp"

#include <cmath>

namespace invlab {

namespace {

Matrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix g(rows, cols);
    for (double& x : g.values()) x = rng.gaussian();
    return g;
}

Vector gaussian_vector(std::size_t n, Rng& rng) {
    Vector v(n);
    for (double& x : v.values()) x = rng.gaussian();
    return v;
}

// diag(d) applied to the columns of m: m * diag(d).
Matrix scale_columns(Matrix m, const std::vector<double>& d) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) r[j] *= d[j];
    }
    return m;
}

}  // namespace

std::string_view to_string(RhsMode m) {
    return m == RhsMode::RandomB ? "random-b" : "random-x";
}

std::optional<RhsMode> parse_rhs_mode(std::string_view s) {
    if (s == "random-b") return RhsMode::RandomB;
    if (s == "random-x") return RhsMode::RandomX;
    return std::nullopt;
}

Matrix random_orthogonal(std::size_t n, Rng& rng) {
    if (n == 0) throw InvalidArgument("random_orthogonal: n must be positive");
    const QrFactors f = qr_householder(gaussian_matrix(n, n, rng));
    Matrix q = f.q();
    for (std::size_t j = 0; j < n; ++j) {
        if (f.qr(j, j) < 0.0) {
            for (std::size_t i = 0; i < n; ++i) q(i, j) = -q(i, j);
        }
    }
    return q;
}

std::vector<double> geometric_spectrum(std::size_t n, double sigma_1, double sigma_n) {
    if (n < 2) throw InvalidArgument("geometric_spectrum: need n >= 2");
    if (!(sigma_n > 0.0) || !(sigma_1 >= sigma_n) || !std::isfinite(sigma_1)) {
        throw InvalidArgument("geometric_spectrum: need sigma_1 >= sigma_n > 0");
    }
    const double lo = std::log10(sigma_1);
    const double hi = std::log10(sigma_n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = std::pow(10.0, lo + static_cast<double>(i) * step);
    s.front() = sigma_1;
    s.back() = sigma_n;
    return s;
}

TestProblem build_problem(std::size_t n, double sigma_1, double sigma_n, std::uint64_t seed) {
    std::vector<double> sigma = geometric_spectrum(n, sigma_1, sigma_n);
    Rng rng_l = problem_stream(seed, StreamId::LeftFactor);
    Rng rng_r = problem_stream(seed, StreamId::RightFactor);
    Matrix l = random_orthogonal(n, rng_l);
    Matrix r = random_orthogonal(n, rng_r);

    std::vector<double> inv_sigma(n);
    for (std::size_t i = 0; i < n; ++i) inv_sigma[i] = 1.0 / sigma[i];

    const Matrix rt = r.transpose();
    const Matrix lt = l.transpose();
    Matrix a = matmul(scale_columns(l, sigma), rt);
    Matrix a_inv = matmul(scale_columns(r, inv_sigma), lt);
    const double kappa = sigma.front() / sigma.back();
    return TestProblem{std::move(a), std::move(a_inv),
                       SvdFactors{std::move(l), std::move(sigma), std::move(r)}, kappa, seed};
}

RhsPair make_rhs(const TestProblem& p, RhsMode mode, Rng& rng) {
    const std::size_t n = p.order();
    const SvdFactors& s = p.svd;
    Vector v = gaussian_vector(n, rng);
    if (mode == RhsMode::RandomB) {
        Vector c = matvec_transposed(s.l, v);
        for (std::size_t i = 0; i < n; ++i) c[i] /= s.sigma[i];
        Vector x = matvec(s.r, c);
        return {std::move(v), std::move(x), mode};
    }
    Vector c = matvec_transposed(s.r, v);
    for (std::size_t i = 0; i < n; ++i) c[i] *= s.sigma[i];
    Vector b = matvec(s.l, c);
    return {std::move(b), std::move(v), mode};
}

Matrix bad_inverse(const TestProblem& p, const Matrix& v, Rng& rng) {
    if (v.rows() != p.order() || v.cols() != p.order()) {
        throw DimensionMismatch("bad_inverse: V has the wrong order");
    }
    const double scale = norm2(v - p.a_inv);
    Matrix g = gaussian_matrix(p.order(), p.order(), rng);
    return p.a_inv + scale * g;
}

}  // namespace invlab
