#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdtk {

/// Undirected multigraph on vertices 0..n-1. Edges are unordered pairs with a
/// multiplicity >= 1; loops are rejected. A graph is "simple" when every
/// multiplicity equals 1. Instances are immutable by convention once built.
class Multigraph {
public:
  Multigraph() = default;
  explicit Multigraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Multigraph: negative order");
  }

  int order() const { return n_; }

  /// Number of edges counted with multiplicity.
  int size() const {
    int m = 0;
    for (auto &[e, mult] : edges_) m += mult;
    return m;
  }

  /// Number of distinct adjacent vertex pairs.
  int support_size() const { return static_cast<int>(edges_.size()); }

  void add_edge(int u, int v, int mult = 1) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Multigraph: loops are rejected");
    if (mult < 1) throw std::invalid_argument("Multigraph: multiplicity < 1");
    edges_[canonical(u, v)] += mult;
  }

  void remove_edge(int u, int v) {
    auto it = edges_.find(canonical(u, v));
    if (it == edges_.end())
      throw std::invalid_argument("Multigraph: removing absent edge");
    edges_.erase(it);
  }

  int multiplicity(int u, int v) const {
    if (u == v) return 0;
    auto it = edges_.find(canonical(u, v));
    return it == edges_.end() ? 0 : it->second;
  }

  bool adjacent(int u, int v) const { return multiplicity(u, v) > 0; }

  /// Degree counted with multiplicity.
  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (auto &[e, mult] : edges_)
      if (e.first == v || e.second == v) d += mult;
    return d;
  }

  bool simple() const {
    for (auto &[e, mult] : edges_)
      if (mult > 1) return false;
    return true;
  }

  /// Distinct neighbors of v in ascending order.
  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (auto &[e, mult] : edges_) {
      if (e.first == v) out.push_back(e.second);
      else if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Sorted distinct-neighbor lists for all vertices.
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n_);
    for (auto &[e, mult] : edges_) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    for (auto &a : adj) std::sort(a.begin(), a.end());
    return adj;
  }

  /// Distinct edges with multiplicities, in canonical (sorted-pair) order.
  const std::map<std::pair<int, int>, int> &edge_multiplicities() const {
    return edges_;
  }

  /// Every edge instance, canonical order, parallel instances consecutive.
  /// The position in this list is the instance id used by the edge-model
  /// observation rules and by certificates.
  std::vector<std::pair<int, int>> edge_instances() const {
    std::vector<std::pair<int, int>> out;
    for (auto &[e, mult] : edges_)
      for (int i = 0; i < mult; ++i) out.push_back(e);
    return out;
  }

  /// Per-vertex lists of incident instance ids (ascending).
  std::vector<std::vector<int>> incidence_lists() const {
    std::vector<std::vector<int>> inc(n_);
    int id = 0;
    for (auto &[e, mult] : edges_)
      for (int i = 0; i < mult; ++i, ++id) {
        inc[e.first].push_back(id);
        inc[e.second].push_back(id);
      }
    return inc;
  }

  bool operator==(const Multigraph &o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

  /// FNV-1a over order and the canonical edge list; identifies a graph in
  /// certificate fingerprints. Not cryptographic.
  std::uint64_t canonical_hash() const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t x) {
      for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
      }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (auto &[e, mult] : edges_) {
      mix(static_cast<std::uint64_t>(e.first));
      mix(static_cast<std::uint64_t>(e.second));
      mix(static_cast<std::uint64_t>(mult));
    }
    return h;
  }

private:
  static std::pair<int, int> canonical(int u, int v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("Multigraph: vertex " + std::to_string(v) +
                                  " out of range [0," + std::to_string(n_) +
                                  ")");
  }

  int n_ = 0;
  std::map<std::pair<int, int>, int> edges_;
};

/// Induced subgraph on the given vertices (sorted ascending); returns the
/// subgraph and the map from new indices to old ones.
inline std::pair<Multigraph, std::vector<int>>
induced_subgraph(const Multigraph &g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = (int)i;
  Multigraph sub((int)vertices.size());
  for (auto &[e, mult] : g.edge_multiplicities())
    if (index[e.first] >= 0 && index[e.second] >= 0)
      sub.add_edge(index[e.first], index[e.second], mult);
  return {sub, vertices};
}

} // namespace pdtk
