#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hadcode/bipolar_matrix.hpp"
#include "hadcode/code.hpp"

namespace hadcode {

// Matrix text: "n m\n" then n lines of m characters from {+,-}.
// Code text:   "N m\n" then N lines of m characters from {0,1}.
// LF line endings, no trailing whitespace, final newline required.
void write_matrix(std::ostream& out, const BipolarMatrix& m);
void write_code(std::ostream& out, const BinaryCode& c);

std::string matrix_to_text(const BipolarMatrix& m);
std::string code_to_text(const BinaryCode& c);

// Throw ParseError naming the 1-based line of the first defect.
BipolarMatrix parse_matrix(std::string_view text);
BinaryCode parse_code(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hadcode
