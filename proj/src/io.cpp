// Copyright 2026 The Authors.
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

#include "matroids/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace matroids {
namespace {

std::vector<std::string> Tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) tokens.push_back(current);
  return tokens;
}

bool AllDigits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int ParseElement(const std::string& token, int n, int line_number) {
  if (!AllDigits(token)) {
    throw ParseError(line_number, "expected an integer, got '" + token + "'");
  }
  long long value = 0;
  for (char c : token) {
    value = value * 10 + (c - '0');
    if (value > 64) break;
  }
  if (value < 1 || value > n) {
    throw ElementOutOfRange(line_number, "element " + token +
                                             " outside 1.." +
                                             std::to_string(n));
  }
  return static_cast<int>(value);
}

ElementSet ParseCompact(const std::string& token, int n, int line_number) {
  ElementSet s;
  for (char c : token) {
    const int e = c - '0';
    if (e < 1 || e > n) {
      throw ElementOutOfRange(line_number, "element " + std::string(1, c) +
                                               " outside 1.." +
                                               std::to_string(n));
    }
    s.Insert(e);
  }
  return s;
}

// One copoint line: either separated integers or, when n <= 9, a single
// compact digit string like "2345678".
ElementSet ParseSetLine(const std::vector<std::string>& tokens, int n,
                        int line_number) {
  if (tokens.size() == 1 && AllDigits(tokens[0]) && tokens[0].size() > 1) {
    if (n <= 9) return ParseCompact(tokens[0], n, line_number);
    long long value = 0;
    for (char c : tokens[0]) {
      value = value * 10 + (c - '0');
      if (value > 64) break;
    }
    if (value > n) {
      throw CompactTokenWithLargeN(
          line_number, "compact digit strings are only accepted for n <= 9");
    }
    return ElementSet::Single(static_cast<int>(value));
  }
  ElementSet s;
  for (const std::string& token : tokens) {
    s.Insert(ParseElement(token, n, line_number));
  }
  return s;
}

std::string StripComment(const std::string& line) {
  const std::size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

ParsedMatroid ParseMatroidText(const std::string& text) {
  ParsedMatroid result;
  std::istringstream in(text);
  std::string raw;
  int line_number = 0;
  bool have_n = false;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::vector<std::string> tokens = Tokenize(StripComment(raw));
    if (tokens.empty()) continue;
    if (!have_n) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw ParseError(line_number, "expected 'n <int>' first");
      }
      const int n = ParseElement(tokens[1], 64, line_number);
      result.n = n;
      have_n = true;
      continue;
    }
    if (tokens[0] == "rank") {
      if (tokens.size() != 2) {
        throw ParseError(line_number, "expected 'rank <int>'");
      }
      result.declared_rank = ParseElement(tokens[1], 64, line_number);
      continue;
    }
    const ElementSet copoint = ParseSetLine(tokens, result.n, line_number);
    if (!result.copoints.Insert(copoint)) {
      result.warnings.push_back("line " + std::to_string(line_number) +
                                ": duplicate copoint {" + ToString(copoint) +
                                "} ignored");
    }
  }
  if (!have_n) throw ParseError(line_number, "missing 'n <int>' line");
  return result;
}

std::string FormatMatroid(const Matroid& m) {
  std::string out = "n " + std::to_string(m.n()) + "\n" +
                    "rank " + std::to_string(m.rank()) + "\n";
  for (ElementSet copoint : m.Copoints()) {
    out += ToString(copoint) + "\n";
  }
  return out;
}

ParsedGraph ParseGraphText(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_number = 0;
  int n = 0;
  bool have_points = false;
  SetFamily lines;
  std::vector<std::string> warnings;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::vector<std::string> tokens = Tokenize(StripComment(raw));
    if (tokens.empty()) continue;
    if (!have_points) {
      if (tokens.size() != 2 || tokens[0] != "points") {
        throw ParseError(line_number, "expected 'points <int>' first");
      }
      n = ParseElement(tokens[1], 64, line_number);
      have_points = true;
      continue;
    }
    const ElementSet line = ParseSetLine(tokens, n, line_number);
    if (!lines.Insert(line)) {
      warnings.push_back("line " + std::to_string(line_number) +
                         ": duplicate line {" + ToString(line) + "} ignored");
    }
  }
  if (!have_points) throw ParseError(line_number, "missing 'points <int>' line");
  return {{ElementSet::Full(n), lines.SortedLex()}, warnings};
}

ElementSet ParseSetToken(const std::string& token, int n) {
  if (AllDigits(token)) {
    if (n <= 9) return ParseCompact(token, n, 0);
    return ElementSet::Single(ParseElement(token, n, 0));
  }
  ElementSet s;
  std::string part;
  for (char c : token + "-") {
    if (c == '-') {
      if (!part.empty()) s.Insert(ParseElement(part, n, 0));
      part.clear();
    } else {
      part += c;
    }
  }
  return s;
}

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace matroids
