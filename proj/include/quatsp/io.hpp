#pragma once

#include <iosfwd>
#include <string>

#include "quatsp/qmatrix.hpp"

namespace quatsp {

// Matrix files are JSON objects {"rows": R, "cols": C, "entries": E} where E
// is an R-list of C-lists of [w, x, y, z] component arrays. Doubles are
// written in shortest round-trip decimal form, so parse(serialize(M)) == M
// bit for bit for finite input.

// Parse a matrix file; ParseError carries the offending location (JSON
// line/column for syntax errors, entry row/column for shape errors).
QMatrix read_matrix(std::istream& in);
QMatrix read_matrix(const std::string& text);
// Reads the file at `path`, or standard input for "-".
QMatrix read_matrix_path(const std::string& path);

// Serialize; throws std::invalid_argument on non-finite components (JSON has
// no representation for them).
void write_matrix(std::ostream& out, const QMatrix& m);
std::string format_matrix(const QMatrix& m);
void write_matrix_path(const std::string& path, const QMatrix& m);

}  // namespace quatsp
