#include "birk/matrix_io.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace birk {

namespace {

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

double parse_token(std::string_view token, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": invalid number '" + std::string(token) +
                              "' (decimal literals only; fractions like 1/3 are "
                              "not accepted)");
    }
    return value;
}

std::vector<double> split_row(const std::string& line, std::size_t line_no,
                              MatrixFormat format) {
    std::vector<double> row;
    if (format == MatrixFormat::DenseText) {
        std::size_t pos = 0;
        while (pos < line.size()) {
            const std::size_t start = line.find_first_not_of(" \t\r", pos);
            if (start == std::string::npos) break;
            std::size_t end = line.find_first_of(" \t\r", start);
            if (end == std::string::npos) end = line.size();
            row.push_back(parse_token(
                std::string_view(line).substr(start, end - start), line_no));
            pos = end;
        }
    } else {
        std::size_t pos = 0;
        for (;;) {
            std::size_t comma = line.find(',', pos);
            std::string field = line.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            const std::size_t a = field.find_first_not_of(" \t\r");
            if (a == std::string::npos) {
                throw ValidationError("line " + std::to_string(line_no) +
                                      ": empty csv field");
            }
            const std::size_t b = field.find_last_not_of(" \t\r");
            row.push_back(
                parse_token(std::string_view(field).substr(a, b - a + 1), line_no));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return row;
}

}  // namespace

DenseMatrix parse_matrix(std::istream& in, MatrixFormat format) {
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        if (format == MatrixFormat::DenseText) {
            const std::size_t first = line.find_first_not_of(" \t");
            if (first != std::string::npos && line[first] == '#') continue;
        }
        rows.push_back(split_row(line, line_no, format));
    }
    if (rows.empty()) throw ValidationError("no matrix data found in input");

    const std::size_t n = rows.front().size();
    if (rows.size() != n) {
        throw ValidationError("matrix is not square: " + std::to_string(rows.size()) +
                              " rows of " + std::to_string(n) + " columns");
    }
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != n) {
            throw ValidationError("ragged row " + std::to_string(i + 1) + ": expected " +
                                  std::to_string(n) + " values, got " +
                                  std::to_string(rows[i].size()));
        }
        entries.insert(entries.end(), rows[i].begin(), rows[i].end());
    }
    return {n, std::move(entries)};
}

DenseMatrix parse_matrix(const std::filesystem::path& path, MatrixFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open input file: " + path.string());
    }
    return parse_matrix(in, format);
}

std::string format_real(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                         std::chars_format::general, 17);
    return {buf.data(), ptr};
}

std::string canonical_bytes(const DenseMatrix& m) {
    const std::size_t n = m.order();
    std::string out = std::to_string(n);
    out += '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j > 0) out += ' ';
            out += format_real(m(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[hash & 0xF];
        hash >>= 4;
    }
    return out;
}

void write_dense(std::ostream& out, const DenseMatrix& m) {
    const std::size_t n = m.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j > 0) out << ' ';
            out << format_real(m(i, j));
        }
        out << '\n';
    }
}

}  // namespace birk
