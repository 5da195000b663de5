#pragma once

#include "opnorm/matrix.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace opnorm {

/// Real entries, comma separated, one row per line, no header.
Matrix parse_matrix_csv(std::string_view text);

/// {"n": 3, "entries": [[[re, im], ...], ...]}
Matrix parse_matrix_json(std::string_view text);

/// Dispatches on content: JSON when the first non-blank character is '{'.
/// Throws ParseError (and std::runtime_error when the file cannot be read).
Matrix read_matrix_file(const std::string& path);

void write_matrix_json(std::ostream& out, const Matrix& a);
void write_matrix_csv(std::ostream& out, const Matrix& a);

} // namespace opnorm
