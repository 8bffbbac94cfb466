#pragma once

#include <vector>

#include "pdtk/multigraph.hpp"

namespace pdtk {

/// Structural flags; each one independently recomputable from the graph.
struct ClassFlags {
  bool cubic = false;
  bool claw_free = false;
  bool diamond_free = false;
  bool two_edge_connected = false;
  bool connected = false;
  bool tree = false;
  bool simple = false;
};

/// Connected-component labels (0-based, by order of discovery from the lowest
/// unvisited vertex), plus the component count.
inline std::pair<std::vector<int>, int> component_labels(const Multigraph &g) {
  int n = g.order();
  std::vector<int> label(n, -1);
  auto adj = g.adjacency();
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (label[w] < 0) {
          label[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return {label, count};
}

inline bool is_connected(const Multigraph &g) {
  if (g.order() <= 1) return true;
  return component_labels(g).second == 1;
}

/// Vertex sets of the connected components, each sorted, ordered by smallest
/// vertex.
inline std::vector<std::vector<int>> components(const Multigraph &g) {
  auto [label, count] = component_labels(g);
  std::vector<std::vector<int>> out(count);
  for (int v = 0; v < g.order(); ++v) out[label[v]].push_back(v);
  return out;
}

/// A claw is an induced K_{1,3}: a center with three pairwise non-adjacent
/// neighbors.
inline bool has_claw(const Multigraph &g) {
  auto adj = g.adjacency();
  for (int v = 0; v < g.order(); ++v) {
    auto &nb = adj[v];
    int d = (int)nb.size();
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        if (g.adjacent(nb[a], nb[b])) continue;
        for (int c = b + 1; c < d; ++c)
          if (!g.adjacent(nb[a], nb[c]) && !g.adjacent(nb[b], nb[c]))
            return true;
      }
  }
  return false;
}

/// Diamond-free under the subgraph convention: no edge lies in two triangles.
inline bool has_diamond_subgraph(const Multigraph &g) {
  auto adj = g.adjacency();
  for (auto &[e, mult] : g.edge_multiplicities()) {
    int common = 0;
    for (int w : adj[e.first])
      if (w != e.second && g.adjacent(w, e.second) && ++common >= 2)
        return true;
  }
  return false;
}

inline bool two_edge_connected(const Multigraph &g); // defined in bridges.hpp

inline ClassFlags classify(const Multigraph &g) {
  ClassFlags f;
  f.simple = g.simple();
  f.connected = is_connected(g);
  f.cubic = g.order() > 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3) {
      f.cubic = false;
      break;
    }
  f.claw_free = !has_claw(g);
  f.diamond_free = !has_diamond_subgraph(g);
  f.tree = f.connected && g.size() == g.order() - 1;
  f.two_edge_connected = two_edge_connected(g);
  return f;
}

} // namespace pdtk

#include "pdtk/bridges.hpp"
