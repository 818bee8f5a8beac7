#pragma once

// Edge-list and DOT serialization for SimpleGraph.
//
// Edge-list format: first line `n`, then one `u v` pair per line with
// 0 <= u < v < n. Blank lines and lines starting with '#' are ignored.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "kappa/errors.hpp"
#include "kappa/graph.hpp"

namespace kappa {

inline SimpleGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("edge list: missing vertex count");
  std::istringstream header(line);
  long long n = -1;
  std::string extra;
  if (!(header >> n) || n < 0 || (header >> extra))
    throw ParseError("edge list line " + std::to_string(line_no) + ": expected a vertex count");

  SimpleGraph g(static_cast<std::size_t>(n));
  while (next_line()) {
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v) || (row >> extra))
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected `u v`");
    if (u < 0 || v >= n || u >= v)
      throw ParseError("edge list line " + std::to_string(line_no) + ": need 0 <= u < v < " + std::to_string(n));
    if (g.has_edge(u, v)) throw ParseError("edge list line " + std::to_string(line_no) + ": duplicate edge");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

inline SimpleGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  out << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline void write_dot(std::ostream& out, const SimpleGraph& g, const std::string& name = "G") {
  out << "graph " << detail::dot_quote(name) << " {\n";
  for (Vertex v = 0; v < g.size(); ++v) out << "  " << v << " [label=" << detail::dot_quote(g.label(v)) << "];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace kappa
