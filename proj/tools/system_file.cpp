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

#include "system_file.hpp"

#include <fstream>
#include <sstream>

namespace linsolve::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<double> parse_vector(const std::string& text, const std::string& context) {
  const MatrixHandle m = parse_matrix(text, context);
  const std::size_t rows = ls_matrix_rows(m.get());
  if (ls_matrix_cols(m.get()) != 1) {
    throw CliError(context + ": expected semicolon-separated values");
  }
  std::vector<double> v(rows);
  check(ls_matrix_entries(m.get(), v.data(), v.size()), context);
  return v;
}

SystemFile parse_system(std::string_view text) {
  std::optional<std::string> a_text, b_text, guess_text;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const std::size_t colon = line.find(':');
    const std::string where = "line " + std::to_string(line_no);
    if (colon == std::string_view::npos) {
      throw CliError(where + ": expected 'A:', 'b:' or 'guess:'");
    }
    const std::string label(trim(line.substr(0, colon)));
    std::string value(trim(line.substr(colon + 1)));

    std::optional<std::string>* slot = nullptr;
    if (label == "A") {
      slot = &a_text;
    } else if (label == "b") {
      slot = &b_text;
    } else if (label == "guess") {
      slot = &guess_text;
    } else {
      throw CliError(where + ": unknown label '" + label + "'");
    }
    if (slot->has_value()) {
      throw CliError(where + ": duplicate '" + label + "' line");
    }
    *slot = std::move(value);
  }

  if (!a_text) throw CliError("system file has no 'A:' line");
  if (!b_text) throw CliError("system file has no 'b:' line");

  SystemFile sys{parse_matrix(*a_text, "A"), parse_vector(*b_text, "b"), std::nullopt};
  if (sys.b.size() != sys.rows()) {
    throw CliError("b has " + std::to_string(sys.b.size()) + " entries but A has " +
                   std::to_string(sys.rows()) + " rows");
  }
  if (guess_text) {
    sys.guess = parse_vector(*guess_text, "guess");
    if (sys.guess->size() != sys.cols()) {
      throw CliError("guess has " + std::to_string(sys.guess->size()) +
                     " entries but A has " + std::to_string(sys.cols()) + " columns");
    }
  }
  return sys;
}

SystemFile load_system(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open input file '" + path + "'");
  std::ostringstream content;
  content << in.rdbuf();
  return parse_system(content.str());
}

}  // namespace linsolve::cli
