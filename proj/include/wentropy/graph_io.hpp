#pragma once

// Edge-list text format: a header line `n <count>` followed by one `u v` pair
// per line, whitespace separated, 0-indexed. Blank lines and lines starting
// with '#' are ignored.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "wentropy/error.hpp"
#include "wentropy/graph.hpp"

namespace wentropy {

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  long long n = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      if (!(fields >> tag >> n) || tag != "n" || n < 1) {
        throw DomainError("line " + std::to_string(line_no) + ": expected header `n <count>`");
      }
      continue;
    }
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0) {
      throw DomainError("line " + std::to_string(line_no) + ": expected `u v`");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    if (u >= n || v >= n) {
      throw DomainError("line " + std::to_string(line_no) + ": vertex out of range");
    }
  }
  if (n < 0) throw DomainError("missing header `n <count>`");
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace wentropy
