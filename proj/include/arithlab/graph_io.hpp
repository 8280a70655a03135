#pragma once

// Text formats shared by the library and the CLI.
//
// Graph file: first line n, then n rows of n non-negative integers (the
// multiplicity matrix), then an optional "# labels: a b c ..." line.
// Blank lines are ignored.
//
// Structure file: one structure per line, "d: 1 2 1 | r: 1 1 1".

#include "arithlab/graph.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arithlab {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

} // namespace detail

inline Multidigraph parse_graph(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
      if (!detail::trim(line).empty()) lines.push_back(std::string(detail::trim(line)));
    }
  }
  if (lines.empty()) throw DomainError("empty graph text");

  auto line_error = [](std::size_t lineno, const std::string &what) {
    return DomainError("graph line " + std::to_string(lineno) + ": " + what);
  };

  auto header = detail::split_ws(lines[0]);
  if (header.size() != 1) throw line_error(1, "expected the vertex count alone");
  long long n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoll(header[0], &pos);
    if (pos != header[0].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception &) {
    throw line_error(1, "vertex count is not an integer");
  }
  if (n < 1) throw line_error(1, "vertex count must be positive");

  const auto size = static_cast<std::size_t>(n);
  if (lines.size() < size + 1) throw DomainError("graph text has fewer than n matrix rows");

  Matrix<Multiplicity> mult(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto &line = lines[i + 1];
    if (!line.empty() && line[0] == '#') throw line_error(i + 2, "expected a matrix row");
    auto toks = detail::split_ws(line);
    if (toks.size() != size)
      throw line_error(i + 2, "expected " + std::to_string(size) + " entries, found " + std::to_string(toks.size()));
    for (std::size_t j = 0; j < size; ++j) {
      long long v = 0;
      try {
        std::size_t pos = 0;
        v = std::stoll(toks[j], &pos);
        if (pos != toks[j].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception &) {
        throw line_error(i + 2, "malformed entry '" + toks[j] + "'");
      }
      if (v < 0) throw line_error(i + 2, "negative multiplicity");
      if (i == j && v != 0) throw line_error(i + 2, "loop arc at vertex " + std::to_string(i + 1));
      mult(i, j) = v;
    }
  }

  std::vector<std::string> labels;
  for (std::size_t k = size + 1; k < lines.size(); ++k) {
    std::string_view line = lines[k];
    constexpr std::string_view tag = "# labels:";
    if (line.substr(0, tag.size()) == tag) {
      if (!labels.empty()) throw line_error(k + 1, "labels given twice");
      labels = detail::split_ws(line.substr(tag.size()));
      if (labels.size() != size) throw line_error(k + 1, "label count does not match vertex count");
      std::set<std::string> seen;
      for (const auto &l : labels)
        if (!seen.insert(l).second) throw line_error(k + 1, "duplicate vertex name '" + l + "'");
    } else if (line[0] == '#') {
      continue;
    } else {
      throw line_error(k + 1, "unexpected content after the matrix");
    }
  }
  return Multidigraph(std::move(mult), std::move(labels));
}

inline std::string emit_graph(const Multidigraph &g) {
  std::ostringstream os;
  os << g.n() << '\n';
  for (std::size_t i = 0; i < g.n(); ++i) {
    for (std::size_t j = 0; j < g.n(); ++j) os << (j ? " " : "") << g.mult(i, j);
    os << '\n';
  }
  if (!g.labels().empty()) {
    os << "# labels:";
    for (const auto &l : g.labels()) os << ' ' << l;
    os << '\n';
  }
  return os.str();
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Multidigraph load_graph(const std::string &path) { return parse_graph(read_file(path)); }

/// Integer matrix text: first line n (or "rows cols"), then the rows.
inline IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::string> toks = detail::split_ws(text);
  if (toks.empty()) throw DomainError("empty matrix text");
  std::istringstream is{std::string(text)};
  std::string first;
  std::getline(is, first);
  auto head = detail::split_ws(first);
  if (head.empty() || head.size() > 2) throw DomainError("matrix header must be 'n' or 'rows cols'");
  std::size_t rows = std::stoul(head[0]);
  std::size_t cols = head.size() == 2 ? std::stoul(head[1]) : rows;
  if (toks.size() != head.size() + rows * cols)
    throw DomainError("matrix text has " + std::to_string(toks.size() - head.size()) + " entries, expected " +
                      std::to_string(rows * cols));
  IntMatrix m(rows, cols);
  std::size_t k = head.size();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = parse_bigint(toks[k++]);
  return m;
}

struct StructureLine {
  Vec d;
  Vec r;
};

inline std::string format_structure(const Vec &d, const Vec &r) {
  return "d: " + join(d) + " | r: " + join(r);
}

inline StructureLine parse_structure_line(std::string_view line) {
  auto bar = line.find('|');
  if (bar == std::string_view::npos) throw DomainError("structure line needs 'd: ... | r: ...'");
  auto left = detail::trim(line.substr(0, bar));
  auto right = detail::trim(line.substr(bar + 1));
  if (left.substr(0, 2) != "d:" || right.substr(0, 2) != "r:")
    throw DomainError("structure line needs 'd: ... | r: ...'");
  StructureLine s{parse_vec(left.substr(2)), parse_vec(right.substr(2))};
  if (s.d.size() != s.r.size()) throw DomainError("structure line has d and r of different lengths");
  return s;
}

inline std::vector<StructureLine> parse_structure_file(std::string_view text) {
  std::vector<StructureLine> out;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    auto t = detail::trim(line);
    if (t.empty() || t[0] == '#' || t.substr(0, 6) == "total:") continue;
    out.push_back(parse_structure_line(t));
  }
  return out;
}

} // namespace arithlab
