// Copyright 2026 The Bimatrix Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bimatrix/io/game_io.h"

#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "bimatrix/errors.h"

namespace bimatrix::io {
namespace {

struct Token {
  std::string_view text;
  int column = 0;
};

struct TextLine {
  int number = 0;
  std::vector<Token> tokens;
};

// Non-blank lines with comments stripped, split on whitespace.
std::vector<TextLine> Tokenize(const std::string& text) {
  std::vector<TextLine> lines;
  std::string_view rest(text);
  int number = 0;
  while (!rest.empty()) {
    ++number;
    const size_t end = rest.find('\n');
    std::string_view line = rest.substr(0, end);
    rest = end == std::string_view::npos ? std::string_view() : rest.substr(end + 1);
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    TextLine parsed{number, {}};
    size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && std::strchr(" \t\r", line[pos]) != nullptr) ++pos;
      const size_t start = pos;
      while (pos < line.size() && std::strchr(" \t\r", line[pos]) == nullptr) ++pos;
      if (pos > start) {
        parsed.tokens.push_back({line.substr(start, pos - start), static_cast<int>(start) + 1});
      }
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
  }
  return lines;
}

double ParseNumber(const Token& token, int line) {
  double value = 0.0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, token.column, "expected a number, got '" + std::string(token.text) + "'");
  }
  return value;
}

int ParseSize(const Token& token, int line) {
  int value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value <= 0) {
    throw ParseError(line, token.column,
                     "expected a positive size, got '" + std::string(token.text) + "'");
  }
  return value;
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void AppendMatrix(const Matrix& m, std::string* out) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) out->push_back(' ');
      out->append(FormatDouble(m(i, j)));
    }
    out->push_back('\n');
  }
}

Vector ParseVector(const TextLine& line) {
  Vector v(static_cast<int>(line.tokens.size()));
  for (size_t k = 0; k < line.tokens.size(); ++k) v[k] = ParseNumber(line.tokens[k], line.number);
  return v;
}

}  // namespace

BimatrixGame ParseGame(const std::string& text) {
  const std::vector<TextLine> lines = Tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty game file");
  const TextLine& header = lines.front();
  if (header.tokens.size() != 2) {
    throw ParseError(header.number, 1, "header must be 'm n'");
  }
  const int m = ParseSize(header.tokens[0], header.number);
  const int n = ParseSize(header.tokens[1], header.number);
  const int data_lines = static_cast<int>(lines.size()) - 1;
  if (data_lines != 2 * m) {
    throw Error(ErrorCode::kShapeMismatch, "expected " + std::to_string(2 * m) +
                                               " matrix rows, found " +
                                               std::to_string(data_lines));
  }
  Matrix r(m, n), c(m, n);
  for (int k = 0; k < 2 * m; ++k) {
    const TextLine& line = lines[k + 1];
    if (static_cast<int>(line.tokens.size()) != n) {
      throw Error(ErrorCode::kShapeMismatch,
                  "line " + std::to_string(line.number) + " has " +
                      std::to_string(line.tokens.size()) + " entries, expected " +
                      std::to_string(n));
    }
    Matrix& target = k < m ? r : c;
    for (int j = 0; j < n; ++j) target(k % m, j) = ParseNumber(line.tokens[j], line.number);
  }
  const bool unit = r.allFinite() && c.allFinite() && r.minCoeff() >= 0.0 &&
                    r.maxCoeff() <= 1.0 && c.minCoeff() >= 0.0 && c.maxCoeff() <= 1.0;
  return unit ? BimatrixGame::FromNormalized(r, c) : BimatrixGame::Normalize(r, c);
}

std::string FormatGame(const BimatrixGame& game) {
  std::string out = std::to_string(game.rows()) + " " + std::to_string(game.cols()) + "\n";
  AppendMatrix(game.R(), &out);
  out.push_back('\n');
  AppendMatrix(game.C(), &out);
  return out;
}

MixedProfile ParseProfile(const std::string& text) {
  const std::vector<TextLine> lines = Tokenize(text);
  if (lines.size() != 2) {
    throw ParseError(lines.empty() ? 1 : lines.back().number, 1,
                     "profile needs exactly two lines");
  }
  return {ParseVector(lines[0]), ParseVector(lines[1])};
}

std::string FormatProfile(const MixedProfile& profile) {
  std::string out;
  AppendMatrix(profile.x.transpose(), &out);
  AppendMatrix(profile.y.transpose(), &out);
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kFileError, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(ErrorCode::kFileError, "write failed for '" + path + "'");
}

BimatrixGame ReadGame(const std::string& path) { return ParseGame(ReadFile(path)); }

void WriteGame(const BimatrixGame& game, const std::string& path) {
  WriteFile(path, FormatGame(game));
}

MixedProfile ReadProfile(const std::string& path) { return ParseProfile(ReadFile(path)); }

}  // namespace bimatrix::io
