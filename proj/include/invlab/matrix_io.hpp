#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "invlab/matrix.hpp"

namespace invlab {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text format: a "rows cols" header line, then one line per row of
/// space-separated values printed with %.17g so that reading them back is
/// exact. Vectors are stored as n x 1 matrices.
void write_matrix(std::ostream& os, const Matrix& m);
void write_vector(std::ostream& os, const Vector& v);

Matrix read_matrix(std::istream& is);
/// Accepts n x 1 or 1 x n.
Vector read_vector(std::istream& is);

/// "-" means stdin/stdout. I/O failures are reported as std::runtime_error
/// carrying the path; malformed content as ParseError.
Matrix load_matrix(const std::string& path);
Vector load_vector(const std::string& path);
void save_matrix(const std::string& path, const Matrix& m);
void save_vector(const std::string& path, const Vector& v);

/// %.17g
std::string format_double(double x);

}  // namespace invlab
