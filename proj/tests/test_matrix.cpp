#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "invlab/matrix.hpp"
#include "invlab/matrix_io.hpp"
#include "invlab/rng.hpp"

using namespace invlab;

TEST(Matrix, ShapeAndStorage) {
    const Matrix m(2, 3, {1, 2, 3, 4, 5, 6});
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_EQ(m(1, 0), 4.0);
    EXPECT_EQ(m.row(1)[2], 6.0);
    EXPECT_EQ(m.column(1), (Vector{2, 5}));
    EXPECT_EQ(m.transpose(), (Matrix{{1, 4}, {2, 5}, {3, 6}}));
}

TEST(Matrix, RejectsBadConstruction) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_THROW(Matrix(0, 3), InvalidArgument);
    EXPECT_THROW(Matrix(2, 2, {1, 2, 3}), DimensionMismatch);
    EXPECT_THROW(Matrix(1, 2, {1, nan}), InvalidArgument);
    EXPECT_THROW((Matrix{{1, 2}, {3}}), DimensionMismatch);
    EXPECT_THROW(Vector(std::vector<double>{inf}), InvalidArgument);
    EXPECT_THROW(Vector(std::size_t{0}), InvalidArgument);
}

TEST(Matrix, ArithmeticChecksShapes) {
    const Matrix a{{1, 2}, {3, 4}};
    EXPECT_EQ(a + a, 2.0 * a);
    EXPECT_EQ(a - a, Matrix(2, 2));
    EXPECT_EQ(minus_identity(a), (Matrix{{0, 2}, {3, 3}}));
    EXPECT_THROW(a + Matrix(2, 3), DimensionMismatch);
    EXPECT_THROW(Vector{1.0} - Vector({1.0, 2.0}), DimensionMismatch);
    EXPECT_THROW(minus_identity(Matrix(2, 3)), DimensionMismatch);
}

TEST(Matrix, RowAndColumnSetters) {
    Matrix m(2, 2);
    m.set_row(0, Vector{1, 2});
    m.set_column(1, Vector{7, 8});
    EXPECT_EQ(m, (Matrix{{1, 7}, {0, 8}}));
    EXPECT_THROW(m.set_row(0, Vector{1, 2, 3}), DimensionMismatch);
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

TEST(MatrixIo, RoundTripIsBitExact) {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix m(3, 4);
        for (double& x : m.values()) {
            x = rng.gaussian() * std::ldexp(1.0, static_cast<int>(rng.next() % 600) - 300);
        }
        std::stringstream ss;
        write_matrix(ss, m);
        EXPECT_EQ(read_matrix(ss), m);
    }
}

TEST(MatrixIo, LayoutAndVectors) {
    std::stringstream ss;
    write_matrix(ss, Matrix{{1, 0.5}, {-2, 0.1}});
    EXPECT_EQ(ss.str(), "2 2\n1 0.5\n-2 0.10000000000000001\n");

    std::stringstream vs("1 3\n1 2 3\n");
    EXPECT_EQ(read_vector(vs), (Vector{1, 2, 3}));
}

TEST(MatrixIo, ParseFailures) {
    auto parse = [](const std::string& s) {
        std::stringstream ss(s);
        return read_matrix(ss);
    };
    EXPECT_THROW(parse(""), ParseError);
    EXPECT_THROW(parse("2 x\n"), ParseError);
    EXPECT_THROW(parse("0 2\n"), ParseError);
    EXPECT_THROW(parse("2 2\n1 2 3\n"), ParseError);
    EXPECT_THROW(parse("1 2\n1 abc\n"), ParseError);
    EXPECT_THROW(parse("1 1\nnan\n"), ParseError);
    EXPECT_THROW(parse("1 1\n1 2\n"), ParseError);
    std::stringstream not_vec("2 2\n1 2 3 4\n");
    EXPECT_THROW(read_vector(not_vec), ParseError);
}
