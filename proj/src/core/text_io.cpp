#include "hadcode/text_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "hadcode/error.hpp"

namespace hadcode {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  if (text.empty()) parse_fail(1, "empty input");
  if (text.back() != '\n') {
    std::size_t lines = 1;
    for (char ch : text) lines += ch == '\n';
    parse_fail(lines, "missing final newline");
  }
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) parse_fail(line, "expected a decimal count");
  return value;
}

std::pair<std::size_t, std::size_t> parse_header(std::string_view header) {
  const std::size_t space = header.find(' ');
  if (space == std::string_view::npos) parse_fail(1, "header must be two counts separated by one space");
  return {parse_count(header.substr(0, space), 1), parse_count(header.substr(space + 1), 1)};
}

// Guards against headers that would allocate absurd amounts before the body is checked.
void check_body(const std::vector<std::string_view>& lines, std::size_t rows) {
  if (lines.size() - 1 < rows) parse_fail(lines.size() + 1, "expected " + std::to_string(rows) + " rows");
  if (lines.size() - 1 > rows) parse_fail(rows + 2, "unexpected extra line");
}

}  // namespace

void write_matrix(std::ostream& out, const BipolarMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  std::string line(m.cols(), '+');
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) line[c] = m.at(r, c) > 0 ? '+' : '-';
    out << line << '\n';
  }
}

void write_code(std::ostream& out, const BinaryCode& code) {
  out << code.size() << ' ' << code.length() << '\n';
  std::string line(code.length(), '0');
  for (std::size_t k = 0; k < code.size(); ++k) {
    const WordRef w = code.word(k);
    for (std::size_t j = 0; j < code.length(); ++j) line[j] = w.bit(j) ? '1' : '0';
    out << line << '\n';
  }
}

std::string matrix_to_text(const BipolarMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

std::string code_to_text(const BinaryCode& c) {
  std::ostringstream os;
  write_code(os, c);
  return os.str();
}

BipolarMatrix parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  const auto [rows, cols] = parse_header(lines[0]);
  check_body(lines, rows);
  BipolarMatrix m(rows, cols, +1);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = lines[r + 1];
    if (row.size() != cols) parse_fail(r + 2, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      if (row[c] == '-') {
        m.set(r, c, -1);
      } else if (row[c] != '+') {
        parse_fail(r + 2, "entries must be '+' or '-'");
      }
    }
  }
  return m;
}

BinaryCode parse_code(std::string_view text) {
  const auto lines = split_lines(text);
  const auto [count, length] = parse_header(lines[0]);
  check_body(lines, count);
  BinaryCode code(length);
  BitVector w(length);
  for (std::size_t k = 0; k < count; ++k) {
    const auto row = lines[k + 1];
    if (row.size() != length) parse_fail(k + 2, "expected " + std::to_string(length) + " bits");
    for (std::size_t j = 0; j < length; ++j) {
      if (row[j] != '0' && row[j] != '1') parse_fail(k + 2, "bits must be '0' or '1'");
      w.set(j, row[j] == '1');
    }
    code.add(w);
  }
  return code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(Errc::IoError, "write failed for " + path);
}

}  // namespace hadcode
