#include "opnorm/matrix_io.hpp"

#include "opnorm/error.hpp"

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace opnorm {
namespace {

bool blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

Matrix parse_matrix_csv(std::string_view text)
{
    std::vector<std::vector<double>> rows;
    std::vector<std::size_t> line_numbers;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        bool empty = true;
        for (char c : line)
            empty &= blank(c);
        if (empty)
            continue;

        std::vector<double> row;
        std::size_t pos = 0;
        while (true) {
            const auto comma = line.find(',', pos);
            const std::size_t end = comma == std::string_view::npos ? line.size() : comma;
            std::size_t b = pos, e = end;
            while (b < e && blank(line[b]))
                ++b;
            while (e > b && blank(line[e - 1]))
                --e;
            if (b == e)
                throw ParseError("empty field", line_no, b + 1);
            double v = 0.0;
            const char* first = line.data() + b;
            if (*first == '+')
                ++first;
            const auto r = std::from_chars(first, line.data() + e, v);
            if (r.ec != std::errc{} || r.ptr != line.data() + e || !std::isfinite(v))
                throw ParseError("not a number: '" + std::string(line.substr(b, e - b)) + "'", line_no, b + 1);
            row.push_back(v);
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        rows.push_back(std::move(row));
        line_numbers.push_back(line_no);
    }

    if (rows.empty())
        throw ParseError("matrix file has no rows", 1, 1);
    const std::size_t n = rows.size();
    std::vector<cplx> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n)
            throw ParseError("row has " + std::to_string(rows[i].size()) + " entries, expected " +
                                 std::to_string(n) + " for a square matrix",
                             line_numbers[i], 1);
        for (double v : rows[i])
            entries.emplace_back(v, 0.0);
    }
    return Matrix(n, std::move(entries));
}

Matrix parse_matrix_json(std::string_view text)
{
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // byte is 1-based and points just past the offending character
        std::size_t line = 1, col = 1;
        const std::size_t limit = std::min(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t k = 0; k < limit; ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("invalid JSON", line, col);
    }

    const auto fail = [](const std::string& what) { return ParseError(what, 0, 0); };
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
        throw fail("expected an object with keys \"n\" and \"entries\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
        throw fail("\"n\" must be a positive integer");
    const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
    const auto& rows = doc["entries"];
    if (!rows.is_array() || rows.size() != n)
        throw fail("\"entries\" must be an array of n rows");

    std::vector<cplx> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n)
            throw fail("entries[" + std::to_string(i) + "] must hold n entries");
        for (std::size_t j = 0; j < n; ++j) {
            const auto& z = row[j];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
                throw fail("entries[" + std::to_string(i) + "][" + std::to_string(j) +
                           "] must be a [re, im] pair of numbers");
            entries.emplace_back(z[0].get<double>(), z[1].get<double>());
        }
    }
    return Matrix(n, std::move(entries));
}

Matrix read_matrix_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (c == '{')
            return parse_matrix_json(text);
        break;
    }
    return parse_matrix_csv(text);
}

void write_matrix_json(std::ostream& out, const Matrix& a)
{
    out << "{\"n\": " << a.size() << ", \"entries\": [";
    for (std::size_t i = 0; i < a.size(); ++i) {
        out << (i ? ",\n  [" : "\n  [");
        for (std::size_t j = 0; j < a.size(); ++j)
            out << (j ? ", [" : "[") << num(a(i, j).real()) << ", " << num(a(i, j).imag()) << "]";
        out << "]";
    }
    out << "\n]}\n";
}

void write_matrix_csv(std::ostream& out, const Matrix& a)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j)
            out << (j ? "," : "") << num(a(i, j).real());
        out << '\n';
    }
}

} // namespace opnorm
