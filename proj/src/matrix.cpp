#include "invlab/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace invlab {

namespace {

void require_finite(std::span<const double> values, const char* what) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw InvalidArgument(std::string(what) + ": non-finite entry");
        }
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    }
}

void require_same_length(const Vector& a, const Vector& b, const char* op) {
    if (a.size() != b.size()) {
        throw DimensionMismatch(std::string(op) + ": lengths " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
    }
}

}  // namespace

Vector::Vector(std::size_t len) : data_(len, 0.0) {
    if (len == 0) throw InvalidArgument("Vector: length must be positive");
}

Vector::Vector(std::vector<double> data) : data_(std::move(data)) {
    if (data_.empty()) throw InvalidArgument("Vector: length must be positive");
    require_finite(data_, "Vector");
}

Vector::Vector(std::initializer_list<double> values) : Vector(std::vector<double>(values)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0) throw InvalidArgument("Matrix: dimensions must be positive");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows == 0 || cols == 0) throw InvalidArgument("Matrix: dimensions must be positive");
    if (data_.size() != rows * cols) {
        throw DimensionMismatch("Matrix: data length " + std::to_string(data_.size()) +
                                " != " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    require_finite(data_, "Matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) throw InvalidArgument("Matrix: dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("Matrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
    require_finite(data_, "Matrix");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_column(std::size_t j, const Vector& v) {
    if (v.size() != rows_) throw DimensionMismatch("set_column: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void Matrix::set_row(std::size_t i, const Vector& v) {
    if (v.size() != cols_) throw DimensionMismatch("set_row: length mismatch");
    std::copy(v.values().begin(), v.values().end(), row(i).begin());
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "operator+");
    Matrix c = a;
    auto cv = c.values();
    auto bv = b.values();
    for (std::size_t k = 0; k < cv.size(); ++k) cv[k] += bv[k];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "operator-");
    Matrix c = a;
    auto cv = c.values();
    auto bv = b.values();
    for (std::size_t k = 0; k < cv.size(); ++k) cv[k] -= bv[k];
    return c;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix c = a;
    for (double& x : c.values()) x *= s;
    return c;
}

Vector operator+(const Vector& a, const Vector& b) {
    require_same_length(a, b, "operator+");
    Vector c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

Vector operator-(const Vector& a, const Vector& b) {
    require_same_length(a, b, "operator-");
    Vector c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

Vector operator*(double s, const Vector& v) {
    Vector c = v;
    for (double& x : c.values()) x *= s;
    return c;
}

Matrix minus_identity(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("minus_identity: matrix not square");
    Matrix c = a;
    for (std::size_t i = 0; i < c.rows(); ++i) c(i, i) -= 1.0;
    return c;
}

}  // namespace invlab
