#include "fremder/matrix_io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "fremder/errors.hpp"

namespace fremder::io {
namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Next line that is neither blank nor a '%' comment.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '%') continue;
        return true;
    }
    return false;
}

double parse_number(std::istringstream& ss, const char* what) {
    double v = 0.0;
    if (!(ss >> v)) throw ParseError(std::string("expected ") + what);
    return v;
}

void expect_line_end(std::istringstream& ss) {
    std::string rest;
    if (ss >> rest) throw ParseError("unexpected trailing token '" + rest + "'");
}

enum class Field { Real, Integer, Complex };
enum class Symmetry { General, Symmetric, SkewSymmetric, Hermitian };

void place(DenseMatrix& m, Index i, Index j, Complex v, Symmetry sym) {
    m(i, j) = v;
    if (i == j) return;
    switch (sym) {
        case Symmetry::General: break;
        case Symmetry::Symmetric: m(j, i) = v; break;
        case Symmetry::SkewSymmetric: m(j, i) = -v; break;
        case Symmetry::Hermitian: m(j, i) = std::conj(v); break;
    }
}

}  // namespace

ComplexMatrix read_matrix_market(std::istream& in) {
    std::string banner;
    if (!std::getline(in, banner)) throw ParseError("empty input");
    std::istringstream hs(banner);
    std::string tag, object, format, field_s, sym_s;
    hs >> tag >> object >> format >> field_s >> sym_s;
    if (tag != "%%MatrixMarket") throw ParseError("missing %%MatrixMarket banner");
    if (lower(object) != "matrix") throw ParseError("unsupported Matrix Market object '" + object + "'");
    format = lower(format);
    if (format != "array" && format != "coordinate") throw ParseError("unsupported format '" + format + "'");

    Field field;
    field_s = lower(field_s);
    if (field_s == "real" || field_s == "double") field = Field::Real;
    else if (field_s == "integer") field = Field::Integer;
    else if (field_s == "complex") field = Field::Complex;
    else throw ParseError("unsupported field '" + field_s + "'");

    Symmetry sym;
    sym_s = lower(sym_s);
    if (sym_s == "general") sym = Symmetry::General;
    else if (sym_s == "symmetric") sym = Symmetry::Symmetric;
    else if (sym_s == "skew-symmetric") sym = Symmetry::SkewSymmetric;
    else if (sym_s == "hermitian") sym = Symmetry::Hermitian;
    else throw ParseError("unsupported symmetry '" + sym_s + "'");
    if (sym == Symmetry::Hermitian && field != Field::Complex) throw ParseError("hermitian symmetry needs complex field");

    std::string line;
    if (!next_data_line(in, line)) throw ParseError("missing size line");
    std::istringstream size_line(line);
    long long rows = 0, cols = 0, entries = 0;
    if (!(size_line >> rows >> cols)) throw ParseError("malformed size line");
    if (format == "coordinate" && !(size_line >> entries)) throw ParseError("coordinate size line needs an entry count");
    expect_line_end(size_line);
    if (rows <= 0 || cols <= 0) throw ParseError("matrix dimensions must be positive");
    if (rows != cols) {
        throw DimensionError("matrix must be square, got " + std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (sym != Symmetry::General && rows != cols) throw ParseError("symmetric storage needs a square matrix");

    const Index n = static_cast<Index>(rows);
    DenseMatrix m = DenseMatrix::Zero(n, n);
    auto read_value = [&](std::istringstream& ss) {
        const double re = parse_number(ss, "real part");
        const double im = field == Field::Complex ? parse_number(ss, "imaginary part") : 0.0;
        return Complex(re, im);
    };

    if (format == "array") {
        // Column-major; symmetric variants store the lower triangle (strictly lower for skew).
        for (Index j = 0; j < n; ++j) {
            const Index first = sym == Symmetry::General ? 0 : (sym == Symmetry::SkewSymmetric ? j + 1 : j);
            for (Index i = first; i < n; ++i) {
                if (!next_data_line(in, line)) throw ParseError("too few array entries");
                std::istringstream ss(line);
                const Complex v = read_value(ss);
                expect_line_end(ss);
                place(m, i, j, v, sym);
            }
        }
    } else {
        for (long long e = 0; e < entries; ++e) {
            if (!next_data_line(in, line)) throw ParseError("too few coordinate entries");
            std::istringstream ss(line);
            long long i = 0, j = 0;
            if (!(ss >> i >> j)) throw ParseError("malformed coordinate indices");
            if (i < 1 || j < 1 || i > rows || j > cols) throw ParseError("coordinate index out of range");
            const Complex v = read_value(ss);
            expect_line_end(ss);
            place(m, static_cast<Index>(i - 1), static_cast<Index>(j - 1), v, sym);
        }
    }
    if (next_data_line(in, line)) throw ParseError("unexpected data after the last entry");
    return ComplexMatrix(std::move(m));
}

ComplexMatrix read_minimal(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw ParseError("empty input");
    std::istringstream head(line);
    long long n = 0;
    if (!(head >> n) || n <= 0) throw ParseError("first line must be a positive dimension");
    expect_line_end(head);
    DenseMatrix m(static_cast<Index>(n), static_cast<Index>(n));
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < n; ++j) {
            if (!next_data_line(in, line)) throw ParseError("too few entries");
            std::istringstream ss(line);
            const double re = parse_number(ss, "real part");
            const double im = parse_number(ss, "imaginary part");
            expect_line_end(ss);
            m(static_cast<Index>(i), static_cast<Index>(j)) = Complex(re, im);
        }
    }
    if (next_data_line(in, line)) throw ParseError("unexpected data after the last entry");
    return ComplexMatrix(std::move(m));
}

ComplexMatrix read_matrix(std::istream& in) {
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream ss(content);
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content.compare(first, 14, "%%MatrixMarket") == 0) {
        ss.seekg(static_cast<std::streamoff>(first));
        return read_matrix_market(ss);
    }
    try {
        return read_minimal(ss);
    } catch (const ValueError& e) {
        throw ParseError(e.what());
    }
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    return read_matrix(in);
}

void write_matrix_market(std::ostream& out, const ComplexMatrix& m) {
    const Index n = m.dim();
    out << "%%MatrixMarket matrix array complex general\n" << n << ' ' << n << '\n';
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) {
            out << format_double(m(i, j).real()) << ' ' << format_double(m(i, j).imag()) << '\n';
        }
    }
}

void write_minimal(std::ostream& out, const ComplexMatrix& m) {
    const Index n = m.dim();
    out << n << '\n';
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            out << format_double(m(i, j).real()) << ' ' << format_double(m(i, j).imag()) << '\n';
        }
    }
}

std::string matrix_digest(const ComplexMatrix& m) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t word) {
        for (int b = 0; b < 8; ++b) {
            h ^= (word >> (8 * b)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(static_cast<std::uint64_t>(m.dim()));
    const Complex* data = m.dense().data();
    for (Index k = 0; k < m.dense().size(); ++k) {
        mix(std::bit_cast<std::uint64_t>(data[k].real()));
        mix(std::bit_cast<std::uint64_t>(data[k].imag()));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace fremder::io
