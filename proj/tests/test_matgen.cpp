#include <gtest/gtest.h>

#include <cmath>

#include "invlab/matgen.hpp"
#include "invlab/metrics.hpp"
#include "support/helpers.hpp"

using namespace invlab;
using namespace testing_support;

// Reference values from an independent Python port of splitmix64 +
// xoshiro256** and the Box-Muller draw order.
TEST(Rng, BitExactStream) {
    Rng r(0);
    EXPECT_EQ(r.next(), 0x99ec5f36cb75f2b4ULL);
    EXPECT_EQ(r.next(), 0xbf6e1f784956452aULL);
    EXPECT_EQ(r.next(), 0x1a5f849d4933e6e0ULL);
    Rng s = Rng::stream(42, 3);
    EXPECT_EQ(s.next(), 0xefbde50fc44e4b4eULL);
}

TEST(Rng, GaussianDrawOrder) {
    Rng r(7);
    EXPECT_NEAR(r.gaussian(), -0.15157274547711355, 1e-15);
    EXPECT_NEAR(r.gaussian(), 0.8298970879692569, 1e-15);
}

TEST(Rng, GaussianMoments) {
    Rng r(1);
    double sum = 0.0, sq = 0.0;
    const int count = 200000;
    for (int i = 0; i < count; ++i) {
        const double z = r.gaussian();
        sum += z;
        sq += z * z;
    }
    EXPECT_NEAR(sum / count, 0.0, 0.01);
    EXPECT_NEAR(sq / count, 1.0, 0.01);
}

TEST(Rng, UniformRange) {
    Rng r(2);
    for (int i = 0; i < 10000; ++i) {
        const double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

// ---------------------------------------------------------------------------

TEST(RandomOrthogonal, OrderOne) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Rng rng(seed);
        const Matrix q = random_orthogonal(1, rng);
        EXPECT_EQ(std::abs(q(0, 0)), 1.0);
    }
}

TEST(RandomOrthogonal, IsOrthogonal) {
    Rng rng(3);
    for (std::size_t n : {2u, 8u, 64u, 130u}) {
        const Matrix q = random_orthogonal(n, rng);
        EXPECT_LE(norm2(minus_identity(matmul(q.transpose(), q))), 10.0 * n * eps) << n;
    }
}

TEST(RandomOrthogonal, SeedsGiveDistinctMatrices) {
    Rng a(100), b(101);
    EXPECT_GE(norm2(random_orthogonal(8, a) - random_orthogonal(8, b)), 0.1);
}

TEST(RandomOrthogonal, RejectsZeroOrder) {
    Rng rng(0);
    EXPECT_THROW(random_orthogonal(0, rng), InvalidArgument);
}

// ---------------------------------------------------------------------------

TEST(GeometricSpectrum, Endpoints) {
    EXPECT_EQ(geometric_spectrum(2, 1e4, 1e-4), (std::vector<double>{1e4, 1e-4}));
}

TEST(GeometricSpectrum, ThreePointsHaveGeometricMean) {
    const std::vector<double> s = geometric_spectrum(3, 4.0, 1.0);
    EXPECT_EQ(s[0], 4.0);
    EXPECT_NEAR(s[1], 2.0, 4 * eps * 2.0);
    EXPECT_EQ(s[2], 1.0);
}

TEST(GeometricSpectrum, DefaultExperimentSpectrum) {
    const std::vector<double> s = geometric_spectrum(256, 1e4, 1e-4);
    ASSERT_EQ(s.size(), 256u);
    EXPECT_EQ(s.front(), 1e4);
    EXPECT_EQ(s.back(), 1e-4);
    const double ratio = std::pow(10.0, -8.0 / 255.0);
    for (std::size_t i = 1; i < s.size(); ++i) {
        EXPECT_LT(s[i], s[i - 1]);
        EXPECT_NEAR(s[i] / s[i - 1], ratio, 1e-12);
    }
}

TEST(GeometricSpectrum, InvalidBounds) {
    EXPECT_THROW(geometric_spectrum(1, 2.0, 1.0), InvalidArgument);
    EXPECT_THROW(geometric_spectrum(4, 1.0, 2.0), InvalidArgument);
    EXPECT_THROW(geometric_spectrum(4, 1.0, 0.0), InvalidArgument);
    EXPECT_THROW(geometric_spectrum(4, 1.0, -1.0), InvalidArgument);
    const std::vector<double> flat = geometric_spectrum(4, 2.0, 2.0);
    EXPECT_EQ(flat, std::vector<double>(4, 2.0));
}

// ---------------------------------------------------------------------------

TEST(BuildProblem, OrthogonalCase) {
    const TestProblem p = build_problem(2, 1.0, 1.0, 5);
    EXPECT_EQ(p.kappa, 1.0);
    EXPECT_LE(norm2(minus_identity(matmul(p.a.transpose(), p.a))), 8 * eps);
    EXPECT_LE(max_abs_diff(p.a_inv, p.a.transpose()), 8 * eps);
}

TEST(BuildProblem, DefaultConditionNumberIsExact) {
    const TestProblem p = build_problem(256, 1e4, 1e-4, 9);
    EXPECT_EQ(p.kappa, 1e8);
    EXPECT_EQ(p.svd.sigma.front(), 1e4);
    EXPECT_EQ(p.svd.sigma.back(), 1e-4);
    EXPECT_EQ(p.seed, 9u);
    const double bound = 100.0 * 256 * p.kappa * eps;
    EXPECT_LE(norm2(minus_identity(matmul(p.a, p.a_inv))), bound);
    EXPECT_LE(norm2(minus_identity(matmul(p.a_inv, p.a))), bound);
}

TEST(BuildProblem, InverseConsistencyAcrossConditioning) {
    const std::size_t n = 40;
    for (double kappa : {1e2, 1e4, 1e8}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const TestProblem p = build_problem(n, std::sqrt(kappa), 1.0 / std::sqrt(kappa), seed);
            const double bound = 100.0 * n * kappa * eps;
            EXPECT_LE(norm2(minus_identity(matmul(p.a, p.a_inv))), bound);
            EXPECT_LE(norm2(minus_identity(matmul(p.a_inv, p.a))), bound);
            EXPECT_LE(norm2(p.a - p.svd.reconstruct()), 10.0 * n * eps * norm2(p.a));
        }
    }
}

TEST(BuildProblem, DeterministicPerSeed) {
    const TestProblem p = build_problem(24, 10.0, 0.1, 123);
    const TestProblem q = build_problem(24, 10.0, 0.1, 123);
    EXPECT_EQ(p.a, q.a);
    EXPECT_EQ(p.a_inv, q.a_inv);
    EXPECT_EQ(p.svd.l, q.svd.l);
    EXPECT_EQ(p.svd.r, q.svd.r);
    EXPECT_NE(build_problem(24, 10.0, 0.1, 124).a, p.a);
}

TEST(BuildProblem, JacobiSvdRecoversConstructionSpectrum) {
    const TestProblem p = build_problem(32, 1e2, 1e-2, 4);
    const SvdFactors s = svd_jacobi(p.a);
    for (std::size_t i = 0; i < 32; ++i) {
        EXPECT_NEAR(s.sigma[i], p.svd.sigma[i], 1e-10 * p.svd.sigma[i]) << i;
    }
}

// ---------------------------------------------------------------------------

TEST(MakeRhs, RandomBIsConsistent) {
    const TestProblem p = build_problem(64, 1e3, 1e-3, 2);
    Rng rng = problem_stream(2, StreamId::RandomB);
    const RhsPair r = make_rhs(p, RhsMode::RandomB, rng);
    EXPECT_EQ(r.mode, RhsMode::RandomB);
    EXPECT_LE(rel_error(matvec(p.a, r.x_ref), r.b), 100.0 * 64 * p.kappa * eps);
}

TEST(MakeRhs, RandomXSuppressesSmallSingularDirections) {
    const TestProblem p = build_problem(256, 1e4, 1e-4, 0);
    Rng rng = problem_stream(0, StreamId::RandomX);
    const RhsPair r = make_rhs(p, RhsMode::RandomX, rng);
    EXPECT_LE(rel_error(matvec(p.a, r.x_ref), r.b), 100.0 * 256 * p.kappa * eps);
    const Vector ln = p.svd.l.column(255);
    EXPECT_LE(std::abs(dot(ln, r.b)) / norm2(r.b), 1e-6);

    // Conditioning-scale accuracy for the factored solve of the same system.
    const Vector x = solve_lu(lu_gepp(p.a), r.b);
    EXPECT_LE(forward_error(x, r.x_ref), 1e3 * p.kappa * eps);
}

TEST(MakeRhs, RandomBHasGaussianWeightOnSmallestDirection) {
    // L_n^T b ~ N(0, 1) and ||b|| ~ 16 at n = 256, so the ratio falls below
    // 1e-3 with probability 2 Phi(0.016) - 1 ~= 0.0128.
    const TestProblem p = build_problem(256, 1e4, 1e-4, 1);
    const Vector ln = p.svd.l.column(255);
    Rng rng = problem_stream(1, StreamId::RandomB);
    const int draws = 2000;
    int large = 0;
    for (int k = 0; k < draws; ++k) {
        const RhsPair r = make_rhs(p, RhsMode::RandomB, rng);
        if (std::abs(dot(ln, r.b)) / norm2(r.b) >= 1e-3) ++large;
    }
    const double fraction = static_cast<double>(large) / draws;
    EXPECT_GE(fraction, 0.98);
    EXPECT_LE(fraction, 0.995);
}

TEST(RhsModeNames, RoundTrip) {
    EXPECT_EQ(parse_rhs_mode("random-b"), RhsMode::RandomB);
    EXPECT_EQ(parse_rhs_mode(to_string(RhsMode::RandomX)), RhsMode::RandomX);
    EXPECT_FALSE(parse_rhs_mode("random"));
}

// ---------------------------------------------------------------------------

TEST(BadInverse, ZeroErrorReturnsAccurateInverse) {
    const TestProblem p = build_problem(16, 10.0, 0.1, 3);
    Rng rng(0);
    EXPECT_EQ(bad_inverse(p, p.a_inv, rng), p.a_inv);
}

TEST(BadInverse, ErrorHasGammaScale) {
    const TestProblem p = build_problem(32, 10.0, 0.1, 3);
    Matrix v = p.a_inv;
    v(3, 4) += 1e-6;
    Rng rng(8);
    const Matrix bad = bad_inverse(p, v, rng);
    // ||G|| for a 32x32 standard Gaussian is about 2 sqrt(32).
    const double ratio = norm2(bad - p.a_inv) / 1e-6;
    EXPECT_GT(ratio, 6.0);
    EXPECT_LT(ratio, 16.0);
    EXPECT_THROW(bad_inverse(p, Matrix(3, 3), rng), DimensionMismatch);
}
