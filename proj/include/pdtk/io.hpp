#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pdtk/multigraph.hpp"

namespace pdtk {

// Plain edge-list text format: "n m" header where m is the number of edge
// lines, then one "u v [mult]" line per distinct pair (0-based). mult defaults
// to 1 and is written only when greater than 1.

inline Multigraph read_edge_list(std::istream &in) {
  int n = -1, m = -1;
  std::string line;
  auto next_data_line = [&]() -> bool {
    while (std::getline(in, line)) {
      auto pos = line.find('#');
      if (pos != std::string::npos) line.erase(pos);
      if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_data_line()) throw std::invalid_argument("edge list: empty input");
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n < 0 || m < 0)
      throw std::invalid_argument("edge list: bad header, expected \"n m\"");
  }
  Multigraph g(n);
  for (int i = 0; i < m; ++i) {
    if (!next_data_line())
      throw std::invalid_argument("edge list: fewer edge lines than header");
    std::istringstream es(line);
    int u, v, mult = 1;
    if (!(es >> u >> v)) throw std::invalid_argument("edge list: bad edge line");
    es >> mult;
    g.add_edge(u, v, mult);
  }
  return g;
}

inline void write_edge_list(std::ostream &out, const Multigraph &g) {
  out << g.order() << ' ' << g.support_size() << '\n';
  for (auto &[e, mult] : g.edge_multiplicities()) {
    out << e.first << ' ' << e.second;
    if (mult > 1) out << ' ' << mult;
    out << '\n';
  }
}

// graph6 for simple graphs (format of McKay's gtools). Only the short and
// 4-byte order encodings are supported; that covers anything at desk scale.

inline Multigraph read_graph6(const std::string &s) {
  std::size_t pos = 0;
  if (s.compare(0, 10, ">>graph6<<") == 0) pos = 10;
  if (pos >= s.size()) throw std::invalid_argument("graph6: empty string");
  long n;
  if (s[pos] != 126) {
    n = s[pos] - 63;
    ++pos;
  } else {
    if (pos + 3 >= s.size() || s[pos + 1] == 126)
      throw std::invalid_argument("graph6: unsupported order encoding");
    n = ((long)(s[pos + 1] - 63) << 12) | ((long)(s[pos + 2] - 63) << 6) |
        (long)(s[pos + 3] - 63);
    pos += 4;
  }
  if (n < 0) throw std::invalid_argument("graph6: bad order");
  Multigraph g((int)n);
  int bit = 0;
  int word = 0;
  auto next_bit = [&]() -> bool {
    if (bit == 0) {
      if (pos >= s.size()) throw std::invalid_argument("graph6: truncated");
      word = s[pos] - 63;
      if (word < 0 || word > 63)
        throw std::invalid_argument("graph6: bad character");
      ++pos;
      bit = 6;
    }
    --bit;
    return (word >> bit) & 1;
  };
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (next_bit()) g.add_edge(i, j);
  return g;
}

inline std::string write_graph6(const Multigraph &g) {
  if (!g.simple())
    throw std::invalid_argument("graph6: graph must be simple");
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back((char)(n + 63));
  } else {
    out.push_back((char)126);
    out.push_back((char)(((n >> 12) & 0x3f) + 63));
    out.push_back((char)(((n >> 6) & 0x3f) + 63));
    out.push_back((char)((n & 0x3f) + 63));
  }
  int word = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back((char)(word + 63));
        word = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back((char)((word << (6 - bits)) + 63));
  return out;
}

inline void write_dot(std::ostream &out, const Multigraph &g,
                      const std::string &name = "G") {
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (auto &[e, mult] : g.edge_multiplicities())
    for (int i = 0; i < mult; ++i)
      out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
}

/// Loads a graph from a file; ".g6" selects graph6, anything else edge list.
inline Multigraph load_graph(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0) {
    std::string line;
    if (!std::getline(in, line))
      throw std::invalid_argument("graph6: empty file: " + path);
    return read_graph6(line);
  }
  return read_edge_list(in);
}

/// Writes a graph to a file; ".g6" selects graph6, ".dot" DOT, else edge list.
inline void save_graph(const std::string &path, const Multigraph &g) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0)
    out << write_graph6(g) << '\n';
  else if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".dot") == 0)
    write_dot(out, g);
  else
    write_edge_list(out, g);
}

} // namespace pdtk
