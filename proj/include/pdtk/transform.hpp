#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pdtk/bridges.hpp"
#include "pdtk/classify.hpp"
#include "pdtk/multigraph.hpp"

namespace pdtk {

/// Smoothing: remove a degree-2 vertex and join its two neighbors with a new
/// edge instance (the pair's multiplicity grows by one, possibly creating a
/// doubled edge). Vertices above v shift down by one. Rejected when both
/// incidences of v go to the same neighbor, since that would create a loop.
struct SmoothResult {
  Multigraph graph;
  std::vector<int> old_of_new; // new index -> old index
  int joined_a, joined_b;      // the neighbors of v, new numbering
};

inline SmoothResult smooth(const Multigraph &g, int v) {
  if (g.degree(v) != 2)
    throw std::invalid_argument("smooth: vertex does not have degree 2");
  auto nb = g.neighbors(v);
  if (nb.size() != 2)
    throw std::invalid_argument(
        "smooth: both incidences go to one neighbor; smoothing would create a loop");
  SmoothResult r;
  r.graph = Multigraph(g.order() - 1);
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  for (auto &[e, mult] : g.edge_multiplicities()) {
    if (e.first == v || e.second == v) continue;
    r.graph.add_edge(shift(e.first), shift(e.second), mult);
  }
  r.graph.add_edge(shift(nb[0]), shift(nb[1]));
  r.old_of_new.resize(g.order() - 1);
  for (int x = 0; x < g.order(); ++x)
    if (x != v) r.old_of_new[shift(x)] = x;
  r.joined_a = shift(nb[0]);
  r.joined_b = shift(nb[1]);
  return r;
}

/// Cartesian product of simple graphs. Vertex (a, b) of G x H gets index
/// a * |V(H)| + b; (a1,b1) ~ (a2,b2) iff a1 = a2 and b1 b2 in E(H), or
/// b1 = b2 and a1 a2 in E(G).
inline Multigraph cartesian_product(const Multigraph &g, const Multigraph &h) {
  if (!g.simple() || !h.simple())
    throw std::invalid_argument(
        "cartesian_product: products of multigraphs are out of scope");
  int nh = h.order();
  Multigraph p(g.order() * nh);
  for (int a = 0; a < g.order(); ++a)
    for (auto &[e, mult] : h.edge_multiplicities())
      p.add_edge(a * nh + e.first, a * nh + e.second);
  for (auto &[e, mult] : g.edge_multiplicities())
    for (int b = 0; b < nh; ++b)
      p.add_edge(e.first * nh + b, e.second * nh + b);
  return p;
}

/// Triangle structure of a 2-edge-connected claw-free diamond-free cubic
/// graph other than K_4: the vertex set partitions into vertex-disjoint
/// triangles, and contracting each triangle to a point yields a cubic
/// multigraph H. The instance table records, for each edge instance of H in
/// canonical order, the underlying edge of g.
struct TriangleContraction {
  Multigraph graph;                             // H
  std::vector<std::array<int, 3>> triangles;    // H vertex -> sorted triangle
  std::vector<int> triangle_of;                 // g vertex -> H vertex
  std::vector<std::pair<int, int>> instance_to_edge; // H instance id -> g edge
};

inline TriangleContraction triangle_contraction(const Multigraph &g) {
  auto flags = classify(g);
  if (!(flags.simple && flags.cubic && flags.claw_free && flags.diamond_free &&
        flags.two_edge_connected))
    throw std::invalid_argument(
        "triangle_contraction: graph must be 2-edge-connected claw-free "
        "diamond-free cubic and simple");
  if (g.order() == 4)
    throw std::invalid_argument("triangle_contraction: K_4 has no triangle partition");

  TriangleContraction tc;
  tc.triangle_of.assign(g.order(), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (tc.triangle_of[v] >= 0) continue;
    auto nb = g.neighbors(v);
    std::optional<std::array<int, 3>> tri;
    for (std::size_t i = 0; i < nb.size() && !tri; ++i)
      for (std::size_t j = i + 1; j < nb.size() && !tri; ++j)
        if (g.adjacent(nb[i], nb[j])) {
          std::array<int, 3> t{v, nb[i], nb[j]};
          std::sort(t.begin(), t.end());
          tri = t;
        }
    if (!tri)
      throw std::invalid_argument(
          "triangle_contraction: vertex lies in no triangle");
    int id = (int)tc.triangles.size();
    for (int x : *tri) {
      if (tc.triangle_of[x] >= 0)
        throw std::invalid_argument(
            "triangle_contraction: vertex lies in two triangles");
      tc.triangle_of[x] = id;
    }
    tc.triangles.push_back(*tri);
  }

  Multigraph h((int)tc.triangles.size());
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cross;
  for (auto &[e, mult] : g.edge_multiplicities()) {
    int a = tc.triangle_of[e.first], b = tc.triangle_of[e.second];
    if (a == b) continue;
    cross[a < b ? std::make_pair(a, b) : std::make_pair(b, a)].push_back(e);
  }
  for (auto &[he, list] : cross) h.add_edge(he.first, he.second, (int)list.size());
  // instance ids follow H's canonical edge order; g-edges within a parallel
  // class are already sorted because edge_multiplicities() iterates in order
  for (auto &[he, mult] : h.edge_multiplicities())
    for (auto &ge : cross[he]) tc.instance_to_edge.push_back(ge);
  tc.graph = std::move(h);

  if (tc.graph.order() % 2 != 0)
    throw std::logic_error("triangle_contraction: contracted order is odd");
  return tc;
}

/// Inverse of triangle_contraction: replace each vertex u of a cubic
/// multigraph by the triangle {3u, 3u+1, 3u+2}. Edge instances attach to the
/// lowest free port of each endpoint triangle, in canonical instance order.
inline Multigraph triangle_expansion(const Multigraph &h) {
  for (int v = 0; v < h.order(); ++v)
    if (h.degree(v) != 3)
      throw std::invalid_argument("triangle_expansion: graph must be cubic");
  Multigraph g(3 * h.order());
  for (int u = 0; u < h.order(); ++u) {
    g.add_edge(3 * u, 3 * u + 1);
    g.add_edge(3 * u, 3 * u + 2);
    g.add_edge(3 * u + 1, 3 * u + 2);
  }
  std::vector<int> used(h.order(), 0);
  for (auto &e : h.edge_instances()) {
    int pu = used[e.first]++, pv = used[e.second]++;
    g.add_edge(3 * e.first + pu, 3 * e.second + pv);
  }
  return g;
}

/// Replaces the edge wz by the path w-u-v-z with the middle edge doubled: the
/// two new vertices u = n, v = n+1 form the unique doubled pair of the result.
/// Inverts the reduction used for multigraphs with one doubled pair.
inline Multigraph subdivide_with_doubled_pair(const Multigraph &g, int w, int z) {
  if (g.multiplicity(w, z) != 1)
    throw std::invalid_argument(
        "subdivide_with_doubled_pair: wz must be an edge of multiplicity 1");
  int n = g.order();
  std::pair<int, int> wz = w < z ? std::pair{w, z} : std::pair{z, w};
  Multigraph out(n + 2);
  for (auto &[e, mult] : g.edge_multiplicities())
    if (e != wz) out.add_edge(e.first, e.second, mult);
  out.add_edge(w, n);
  out.add_edge(n, n + 1, 2);
  out.add_edge(n + 1, z);
  return out;
}

} // namespace pdtk
