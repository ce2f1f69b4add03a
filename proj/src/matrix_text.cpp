// Copyright 2026 The linsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Matrix-string grammar:
//   MATRIX := ROW (';' ROW)*
//   ROW    := NUMBER (',' NUMBER)*
//   NUMBER := [+-]? DIGITS ('.' DIGITS?)? ([eE] [+-]? DIGITS)?
// Spaces, tabs, CR and LF may surround any token.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <sstream>
#include <system_error>

#include "linsolve/matrix.hpp"

namespace linsolve {

namespace {

bool is_blank(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

// Accepts exactly the NUMBER production; anything else (hex, inf, nan, a
// bare '.', embedded blanks) is rejected before from_chars sees it.
bool matches_number(std::string_view t) noexcept {
  std::size_t k = 0;
  auto digits = [&] {
    const std::size_t start = k;
    while (k < t.size() && is_digit(t[k])) ++k;
    return k > start;
  };
  if (k < t.size() && (t[k] == '+' || t[k] == '-')) ++k;
  if (!digits()) return false;
  if (k < t.size() && t[k] == '.') {
    ++k;
    digits();
  }
  if (k < t.size() && (t[k] == 'e' || t[k] == 'E')) {
    ++k;
    if (k < t.size() && (t[k] == '+' || t[k] == '-')) ++k;
    if (!digits()) return false;
  }
  return k == t.size();
}

// Base-10 exponent of the leading significant digit of a token that already
// matched NUMBER. Only consulted for out-of-range values, which are nonzero.
long decimal_magnitude(std::string_view t) noexcept {
  std::size_t k = (t.front() == '+' || t.front() == '-') ? 1 : 0;
  long int_digits = 0;
  long position = 0;  // index among all mantissa digits
  long first_nonzero = -1;
  bool in_fraction = false;
  for (; k < t.size() && t[k] != 'e' && t[k] != 'E'; ++k) {
    if (t[k] == '.') {
      in_fraction = true;
      continue;
    }
    if (!in_fraction) ++int_digits;
    if (first_nonzero < 0 && t[k] != '0') first_nonzero = position;
    ++position;
  }
  long exponent = 0;
  if (k < t.size()) {
    ++k;
    bool negative = false;
    if (t[k] == '+' || t[k] == '-') negative = t[k++] == '-';
    for (; k < t.size(); ++k) {
      exponent = std::min(exponent * 10 + (t[k] - '0'), 1'000'000'000L);
    }
    if (negative) exponent = -exponent;
  }
  if (first_nonzero < 0) return -1;
  return int_digits - first_nonzero - 1 + exponent;
}

[[noreturn]] void fail(ErrorCode code, const std::string& what, std::size_t row,
                       std::size_t col) {
  std::ostringstream msg;
  msg << what << " (row " << row << ", column " << col << ")";
  throw ParseError(code, msg.str(), row, col);
}

double parse_number(std::string_view token, std::size_t row, std::size_t col) {
  const std::string_view t = trim(token);
  if (t.empty()) fail(ErrorCode::BadNumber, "missing number", row, col);
  if (!matches_number(t)) {
    fail(ErrorCode::BadNumber, "cannot parse '" + std::string(t) + "' as a number",
         row, col);
  }
  // from_chars rejects a leading '+'.
  const std::string_view body = t.front() == '+' ? t.substr(1) : t;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec == std::errc::result_out_of_range) {
    if (decimal_magnitude(body) >= 0) {
      fail(ErrorCode::NonFiniteEntry, "'" + std::string(t) + "' overflows double",
           row, col);
    }
    return body.front() == '-' ? -0.0 : 0.0;
  }
  if (ec != std::errc() || ptr != body.data() + body.size()) {
    fail(ErrorCode::BadNumber, "cannot parse '" + std::string(t) + "' as a number",
         row, col);
  }
  if (!std::isfinite(value)) {
    fail(ErrorCode::NonFiniteEntry, "non-finite entry", row, col);
  }
  return value;
}

template <class F>
void split(std::string_view text, char sep, F&& visit) {
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      visit(text.substr(start));
      return;
    }
    visit(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

DenseMatrix parse_matrix(std::string_view text) {
  if (trim(text).empty()) {
    throw ParseError(ErrorCode::EmptyInput, "empty matrix string", 0, 0);
  }
  std::vector<double> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;

  split(text, ';', [&](std::string_view row_text) {
    const std::size_t row = rows++;
    std::size_t col = 0;
    split(row_text, ',', [&](std::string_view token) {
      entries.push_back(parse_number(token, row, col));
      ++col;
    });
    if (row == 0) {
      cols = col;
    } else if (col != cols) {
      std::ostringstream msg;
      msg << "row " << row << " has " << col << " entries, expected " << cols;
      throw ParseError(ErrorCode::RaggedRows, msg.str(), row, 0);
    }
  });
  return DenseMatrix(rows, cols, std::move(entries));
}

std::string format_scalar(double value) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), ptr);
}

std::string format_matrix(const DenseMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_scalar(m(i, j));
    }
  }
  return out;
}

}  // namespace linsolve
