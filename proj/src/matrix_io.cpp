#include "invlab/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

namespace invlab {

namespace {

bool next_token(std::istream& is, std::string& tok) { return static_cast<bool>(is >> tok); }

double parse_double(const std::string& tok) {
    double x = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, x);
    if (ec != std::errc() || ptr != last) throw ParseError("invalid number '" + tok + "'");
    return x;
}

std::size_t parse_dim(const std::string& tok) {
    std::size_t d = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || d == 0) {
        throw ParseError("invalid dimension '" + tok + "'");
    }
    return d;
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_matrix(std::ostream& os, const Matrix& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) os << ' ';
            os << format_double(r[j]);
        }
        os << '\n';
    }
}

void write_vector(std::ostream& os, const Vector& v) {
    write_matrix(os, Matrix(v.size(), 1, std::vector<double>(v.values().begin(), v.values().end())));
}

Matrix read_matrix(std::istream& is) {
    std::string tok;
    if (!next_token(is, tok)) throw ParseError("missing header");
    const std::size_t rows = parse_dim(tok);
    if (!next_token(is, tok)) throw ParseError("missing column count");
    const std::size_t cols = parse_dim(tok);

    std::vector<double> data;
    data.reserve(rows * cols);
    for (std::size_t k = 0; k < rows * cols; ++k) {
        if (!next_token(is, tok)) {
            throw ParseError("expected " + std::to_string(rows * cols) + " values, found " +
                             std::to_string(k));
        }
        data.push_back(parse_double(tok));
    }
    if (next_token(is, tok)) throw ParseError("trailing data after " + std::to_string(rows * cols) + " values");
    try {
        return Matrix(rows, cols, std::move(data));
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
    }
}

Vector read_vector(std::istream& is) {
    Matrix m = read_matrix(is);
    if (m.cols() != 1 && m.rows() != 1) {
        throw ParseError("expected a vector, found a " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    }
    return Vector(std::vector<double>(m.values().begin(), m.values().end()));
}

namespace {

template <class Reader>
auto load(const std::string& path, Reader read) {
    if (path == "-") return read(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    try {
        return read(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

template <class Writer>
void save(const std::string& path, Writer write) {
    if (path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write(out);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

Matrix load_matrix(const std::string& path) {
    return load(path, [](std::istream& is) { return read_matrix(is); });
}

Vector load_vector(const std::string& path) {
    return load(path, [](std::istream& is) { return read_vector(is); });
}

void save_matrix(const std::string& path, const Matrix& m) {
    save(path, [&](std::ostream& os) { write_matrix(os, m); });
}

void save_vector(const std::string& path, const Vector& v) {
    save(path, [&](std::ostream& os) { write_vector(os, v); });
}

}  // namespace invlab
