#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "invlab/linalg.hpp"
#include "invlab/rng.hpp"

namespace invlab {

/// A = L diag(sigma) R^T with its inverse assembled from the same factors.
/// Each product has an orthogonal factor, so both `a` and `a_inv` are accurate
/// to about eps relative.
struct TestProblem {
    Matrix a;
    Matrix a_inv;
    SvdFactors svd;  ///< the construction factors, not a recomputed SVD
    double kappa = 1.0;
    std::uint64_t seed = 0;

    std::size_t order() const noexcept { return a.rows(); }
};

enum class RhsMode { RandomB, RandomX };

std::string_view to_string(RhsMode m);
std::optional<RhsMode> parse_rhs_mode(std::string_view s);

struct RhsPair {
    Vector b;
    Vector x_ref;
    RhsMode mode;
};

/// Stream ids under the problem seed. build_problem uses the first two.
enum class StreamId : std::uint64_t { LeftFactor = 1, RightFactor = 2, RandomB = 3, RandomX = 4, BadInverse = 5 };

inline Rng problem_stream(std::uint64_t seed, StreamId id) {
    return Rng::stream(seed, static_cast<std::uint64_t>(id));
}

/// Haar orthogonal matrix: Householder QR of an n x n standard Gaussian
/// matrix (drawn in row-major order), with columns of Q flipped so that R has
/// a nonnegative diagonal.
Matrix random_orthogonal(std::size_t n, Rng& rng);

/// n values from sigma_1 down to sigma_n, equally spaced in log10. The
/// endpoints are returned exactly.
std::vector<double> geometric_spectrum(std::size_t n, double sigma_1, double sigma_n);

TestProblem build_problem(std::size_t n, double sigma_1, double sigma_n, std::uint64_t seed);

/// RandomB: Gaussian b, x_ref = R (Sigma^{-1} (L^T b)).
/// RandomX: Gaussian x_ref, b = L (Sigma (R^T x_ref)).
RhsPair make_rhs(const TestProblem& p, RhsMode mode, Rng& rng);

/// a_inv + ||v - a_inv||_2 * G with G standard Gaussian: an inverse whose
/// error has the same norm as v's but no structure.
Matrix bad_inverse(const TestProblem& p, const Matrix& v, Rng& rng);

}  // namespace invlab
