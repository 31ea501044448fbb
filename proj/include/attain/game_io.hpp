// Copyright 2026 The Attain Authors. All rights reserved.
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

#pragma once

// Game text format:
//
//   game m=<int> n1=<int> n2=<int>
//   labels1: <n1 whitespace-separated labels>    (optional)
//   labels2: <n2 whitespace-separated labels>    (optional)
//   <i> <j> <v_1> ... <v_m>                      (one line per entry)
//
// All n1*n2 entries must be present exactly once.  Blank lines and lines
// starting with '#' are ignored.  Errors report the offending line number.

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "attain/game.hpp"

namespace attain {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline bool io_skippable(const std::string& s) {
  for (char c : s) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline long io_int_field(std::istringstream& in, int line, const char* what) {
  long v;
  if (!(in >> v)) throw ParseError(line, std::string("expected integer ") + what);
  return v;
}

}  // namespace detail

inline Game parse_game(std::istream& in) {
  std::string line;
  int lineno = 0;

  auto next_meaningful = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!detail::io_skippable(line)) {
        out = line;
        return true;
      }
    }
    return false;
  };

  std::string header;
  if (!next_meaningful(header)) throw ParseError(lineno, "missing header");
  {
    std::istringstream hs(header);
    std::string tag, fm, fn1, fn2;
    hs >> tag >> fm >> fn1 >> fn2;
    auto keyed = [&](const std::string& field, const char* key) {
      std::string prefix = std::string(key) + "=";
      if (field.rfind(prefix, 0) != 0)
        throw ParseError(lineno, "header must read 'game m=<int> n1=<int> n2=<int>'");
      try {
        return std::stoi(field.substr(prefix.size()));
      } catch (const std::exception&) {
        throw ParseError(lineno, std::string("bad integer for ") + key);
      }
    };
    if (tag != "game")
      throw ParseError(lineno, "header must start with 'game'");
    int m = keyed(fm, "m"), n1 = keyed(fn1, "n1"), n2 = keyed(fn2, "n2");
    if (m <= 0 || n1 <= 0 || n2 <= 0)
      throw ParseError(lineno, "m, n1, n2 must be positive");
    Game g(m, n1, n2);
    std::vector<char> seen(static_cast<std::size_t>(n1) * n2, 0);
    int entries = 0;

    std::string body;
    while (next_meaningful(body)) {
      std::istringstream bs(body);
      std::string first;
      bs >> first;
      if (first == "labels1:" || first == "labels2:") {
        auto& labels = (first == "labels1:") ? g.labels1 : g.labels2;
        int want = (first == "labels1:") ? n1 : n2;
        if (!labels.empty()) throw ParseError(lineno, "duplicate " + first.substr(0, 7) + " line");
        std::string tok;
        while (bs >> tok) labels.push_back(tok);
        if (static_cast<int>(labels.size()) != want)
          throw ParseError(lineno, first.substr(0, 7) + " needs exactly " +
                                       std::to_string(want) + " labels");
        continue;
      }
      std::istringstream es(body);
      long i = detail::io_int_field(es, lineno, "row index");
      long j = detail::io_int_field(es, lineno, "column index");
      if (i < 0 || i >= n1) throw ParseError(lineno, "row index out of range");
      if (j < 0 || j >= n2) throw ParseError(lineno, "column index out of range");
      std::size_t idx = static_cast<std::size_t>(i) * n2 + j;
      if (seen[idx]) throw ParseError(lineno, "duplicate entry (" + std::to_string(i) + ", " +
                                                  std::to_string(j) + ")");
      Vec v(m);
      for (int d = 0; d < m; ++d)
        if (!(es >> v[d])) throw ParseError(lineno, "expected " + std::to_string(m) + " payoff values");
      double extra;
      if (es >> extra) throw ParseError(lineno, "trailing values after entry");
      g.payoffs[idx] = std::move(v);
      seen[idx] = 1;
      ++entries;
    }
    if (entries != n1 * n2) {
      for (std::size_t idx = 0; idx < seen.size(); ++idx)
        if (!seen[idx])
          throw ParseError(lineno, "missing entry (" + std::to_string(idx / n2) + ", " +
                                       std::to_string(idx % n2) + ")");
    }
    g.validate();
    return g;
  }
}

inline Game parse_game(const std::string& text) {
  std::istringstream in(text);
  return parse_game(in);
}

inline Game load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open game file: " + path);
  return parse_game(in);
}

inline void print_game(std::ostream& out, const Game& g) {
  out << "game m=" << g.m << " n1=" << g.n1 << " n2=" << g.n2 << "\n";
  auto labels_line = [&](const char* key, const std::vector<std::string>& labels) {
    if (labels.empty()) return;
    out << key << ":";
    for (const std::string& l : labels) out << " " << l;
    out << "\n";
  };
  labels_line("labels1", g.labels1);
  labels_line("labels2", g.labels2);
  out << std::setprecision(17);
  for (int i = 0; i < g.n1; ++i)
    for (int j = 0; j < g.n2; ++j) {
      out << i << " " << j;
      for (double v : g.at(i, j)) out << " " << v;
      out << "\n";
    }
}

inline std::string print_game(const Game& g) {
  std::ostringstream out;
  print_game(out, g);
  return out.str();
}

}  // namespace attain
