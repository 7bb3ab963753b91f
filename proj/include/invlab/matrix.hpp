#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace invlab {

/// Unit roundoff of binary64, 2^-53. Every tolerance in the library is a
/// multiple of this.
inline constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2.0;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class LinalgError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public LinalgError {
public:
    using LinalgError::LinalgError;
};

class InvalidArgument : public LinalgError {
public:
    using LinalgError::LinalgError;
};

/// Raised when a pivot, triangular diagonal, or block determinant falls under
/// the rank-decision threshold. `where()` names the elimination step or the
/// recursion path that failed.
class SingularMatrix : public LinalgError {
public:
    SingularMatrix(const std::string& what, std::string where)
        : LinalgError(what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

class NonConvergence : public LinalgError {
public:
    NonConvergence(const std::string& what, double last_measure)
        : LinalgError(what), last_measure_(last_measure) {}
    double last_measure() const noexcept { return last_measure_; }

private:
    double last_measure_;
};

// ---------------------------------------------------------------------------
// Dense carriers
// ---------------------------------------------------------------------------

class Vector {
public:
    /// Zero vector of length `len` (> 0).
    explicit Vector(std::size_t len);
    /// Takes ownership of `data`; rejects empty or non-finite input.
    explicit Vector(std::vector<double> data);
    Vector(std::initializer_list<double> values);

    std::size_t size() const noexcept { return data_.size(); }

    double operator[](std::size_t i) const { return data_[i]; }
    double& operator[](std::size_t i) { return data_[i]; }

    std::span<const double> values() const noexcept { return data_; }
    std::span<double> values() noexcept { return data_; }

    bool operator==(const Vector&) const = default;

private:
    std::vector<double> data_;
};

/// Row-major dense binary64 matrix.
class Matrix {
public:
    /// Zero matrix; both dimensions must be positive.
    Matrix(std::size_t rows, std::size_t cols);
    /// Row-major `data` of length rows*cols; entries must be finite.
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);
    /// Nested-list literal, one inner list per row.
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    std::span<const double> values() const noexcept { return data_; }
    std::span<double> values() noexcept { return data_; }

    Vector column(std::size_t j) const;
    void set_column(std::size_t j, const Vector& v);
    void set_row(std::size_t i, const Vector& v);

    Matrix transpose() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& v);

/// A - I for square A.
Matrix minus_identity(const Matrix& a);

}  // namespace invlab
