#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "pdtk/classify.hpp"
#include "pdtk/multigraph.hpp"

namespace pdtk {

namespace detail {

/// Lowpoint DFS over edge instances. Parallel edges carry distinct instance
/// ids, so a doubled edge is never reported as a bridge.
inline std::vector<std::pair<int, int>> bridges_unchecked(const Multigraph &g) {
  int n = g.order();
  auto inst = g.edge_instances();
  auto inc = g.incidence_lists();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> out;
  int timer = 0;
  // iterative DFS: (vertex, parent instance id, incidence cursor)
  std::vector<std::tuple<int, int, std::size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    stack.emplace_back(s, -1, 0);
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      auto &[v, pe, cursor] = stack.back();
      if (cursor < inc[v].size()) {
        int eid = inc[v][cursor++];
        if (eid == pe) continue;
        int w = inst[eid].first == v ? inst[eid].second : inst[eid].first;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.emplace_back(w, eid, 0);
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        auto [v2, pe2, c2] = stack.back();
        stack.pop_back();
        if (!stack.empty()) {
          int parent = std::get<0>(stack.back());
          low[parent] = std::min(low[parent], low[v2]);
          if (low[v2] > disc[parent]) out.push_back(inst[pe2]);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

/// Cut edges of a connected multigraph, canonical order.
inline std::vector<std::pair<int, int>> bridges(const Multigraph &g) {
  if (!is_connected(g))
    throw std::invalid_argument("bridges: graph must be connected");
  return detail::bridges_unchecked(g);
}

inline bool two_edge_connected(const Multigraph &g) {
  if (g.order() < 2 || !is_connected(g)) return false;
  return detail::bridges_unchecked(g).empty();
}

enum class ComponentType { I, II, III };

inline const char *to_string(ComponentType t) {
  switch (t) {
  case ComponentType::I: return "I";
  case ComponentType::II: return "II";
  case ComponentType::III: return "III";
  }
  return "?";
}

/// Components of G - B(G) with their types, and the tree T_G on component
/// indices. Type I is a single vertex, Type II a cycle, Type III a
/// 2-edge-connected graph with maximum degree 3.
struct BridgeDecomposition {
  std::vector<std::pair<int, int>> bridges;
  std::vector<std::vector<int>> component_vertices; // sorted, by min vertex
  std::vector<ComponentType> component_types;
  std::vector<int> component_of; // vertex -> component index
  Multigraph tree;               // T_G, b+1 vertices, b edges
};

inline BridgeDecomposition bridge_decomposition(const Multigraph &g) {
  if (!is_connected(g))
    throw std::invalid_argument("bridge_decomposition: graph must be connected");
  BridgeDecomposition d;
  d.bridges = detail::bridges_unchecked(g);

  Multigraph stripped(g.order());
  for (auto &[e, mult] : g.edge_multiplicities())
    if (!std::binary_search(d.bridges.begin(), d.bridges.end(), e))
      stripped.add_edge(e.first, e.second, mult);
  d.component_vertices = components(stripped);
  d.component_of.assign(g.order(), -1);
  for (std::size_t c = 0; c < d.component_vertices.size(); ++c)
    for (int v : d.component_vertices[c]) d.component_of[v] = (int)c;

  for (auto &verts : d.component_vertices) {
    auto [h, map] = induced_subgraph(stripped, verts);
    if (h.order() == 1) {
      d.component_types.push_back(ComponentType::I);
      continue;
    }
    bool all_deg2 = true;
    int max_deg = 0;
    for (int v = 0; v < h.order(); ++v) {
      int deg = h.degree(v);
      max_deg = std::max(max_deg, deg);
      if (deg != 2) all_deg2 = false;
    }
    if (all_deg2) {
      d.component_types.push_back(ComponentType::II);
    } else if (max_deg == 3 && two_edge_connected(h)) {
      d.component_types.push_back(ComponentType::III);
    } else {
      throw std::invalid_argument(
          "bridge_decomposition: component matches none of Types I/II/III "
          "(input is not sub-cubic)");
    }
  }

  d.tree = Multigraph((int)d.component_vertices.size());
  for (auto &b : d.bridges)
    d.tree.add_edge(d.component_of[b.first], d.component_of[b.second]);
  return d;
}

} // namespace pdtk
