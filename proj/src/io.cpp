#include "tropical/io.hpp"

#include <charconv>
#include <cstdint>
#include <vector>

#include "tropical/errors.hpp"

namespace tropical::io {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_blank(line[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !is_blank(line[pos])) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

TropicalValue parse_token(std::string_view token, std::size_t line, std::size_t column) {
  if (token == "E") return E;
  std::int64_t v = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) throw BadToken(line, column, std::string(token));
  return v;
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  std::vector<TropicalValue> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (rows == 0) {
      cols = tokens.size();
    } else if (tokens.size() != cols) {
      throw RaggedRows(line_no, cols, tokens.size());
    }
    for (std::size_t j = 0; j < tokens.size(); ++j) entries.push_back(parse_token(tokens[j], line_no, j + 1));
    ++rows;
  }

  if (rows == 0) throw EmptyInput();
  return Matrix(rows, cols, std::move(entries));
}

std::string format_scalar(TropicalValue v) { return v.is_epsilon() ? "E" : std::to_string(v.value()); }

std::string format_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += format_scalar(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::string format_frames(std::span<const Matrix> frames) {
  std::string out;
  for (std::size_t n = 0; n < frames.size(); ++n) {
    if (n) out += '\n';
    out += format_matrix(frames[n]);
  }
  return out;
}

TropicalValue parse_scalar(std::string_view token) { return parse_token(token, 1, 1); }

}  // namespace tropical::io
