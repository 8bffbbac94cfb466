#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdtk/classify.hpp"
#include "pdtk/multigraph.hpp"
#include "pdtk/transform.hpp"

namespace pdtk {

/// Deterministic RNG wrapper. mt19937_64 output is pinned by the standard;
/// modulo reduction keeps results platform-independent, which the
/// distribution classes would not. Desk scale makes the modulo bias moot.
class DetRng {
public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  int below(int k) { return k <= 1 ? 0 : (int)(eng_() % (std::uint64_t)k); }
  template <class T> void shuffle(std::vector<T> &v) {
    for (int i = (int)v.size() - 1; i > 0; --i)
      std::swap(v[i], v[below(i + 1)]);
  }

private:
  std::mt19937_64 eng_;
};

inline Multigraph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path: order must be >= 1");
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// cycle(2) is the doubled edge, the smallest multigraph cycle.
inline Multigraph cycle_graph(int n) {
  if (n < 2) throw std::invalid_argument("cycle: order must be >= 2");
  Multigraph g(n);
  if (n == 2) {
    g.add_edge(0, 1, 2);
    return g;
  }
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Multigraph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete: order must be >= 1");
  Multigraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// Left side 0..m-1, right side m..m+n-1.
inline Multigraph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("complete_bipartite: sides must be >= 1");
  Multigraph g(m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
  return g;
}

/// K_{1,k}: center 0, leaves 1..k.
inline Multigraph star_graph(int k) { return complete_bipartite(1, k); }

/// Adjacent centers 0 and 1; a leaves 2..a+1 on 0, b leaves a+2..a+b+1 on 1.
inline Multigraph double_star(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("double_star: leaf counts must be >= 1");
  Multigraph g(a + b + 2);
  g.add_edge(0, 1);
  for (int i = 0; i < a; ++i) g.add_edge(0, 2 + i);
  for (int i = 0; i < b; ++i) g.add_edge(1, 2 + a + i);
  return g;
}

/// D_k: k diamonds in a ring. Diamond i sits on 4i..4i+3 with hubs 4i, 4i+1
/// and degree-two corners 4i+2, 4i+3; corner 4i+3 links to corner
/// 4(i+1 mod k)+2. D_1 is K_4.
inline Multigraph diamond_necklace(int k) {
  if (k < 1) throw std::invalid_argument("diamond_necklace: k must be >= 1");
  Multigraph g(4 * k);
  for (int i = 0; i < k; ++i) {
    int b = 4 * i;
    g.add_edge(b, b + 1);
    g.add_edge(b, b + 2);
    g.add_edge(b, b + 3);
    g.add_edge(b + 1, b + 2);
    g.add_edge(b + 1, b + 3);
  }
  for (int i = 0; i < k; ++i) g.add_edge(4 * i + 3, 4 * ((i + 1) % k) + 2);
  return g;
}

inline Multigraph ring_of_diamonds(int k) { return diamond_necklace(k); }

/// The 12-vertex sharp example: two triangle pairs 0..5 and 6..11, joined so
/// that vertices 2 and 11 form a minimum power dominating set.
inline Multigraph figure1_graph() {
  Multigraph g(12);
  const int edges[18][2] = {{0, 1}, {1, 2}, {2, 3},  {3, 4},  {4, 5},  {0, 5},
                            {1, 3}, {0, 4}, {2, 8},  {6, 7},  {7, 8},  {8, 9},
                            {9, 10}, {10, 11}, {6, 11}, {5, 11}, {6, 10}, {7, 9}};
  for (auto &e : edges) g.add_edge(e[0], e[1]);
  return g;
}

/// 12-vertex bridged cubic multigraph: a central triangle 0,1,2 with three
/// doubled-edge balloons hanging off it; its bridge tree is K_{1,3}.
inline Multigraph figure2_g0_graph() {
  Multigraph g(12);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  g.add_edge(4, 5, 2);
  g.add_edge(0, 6);
  g.add_edge(6, 7);
  g.add_edge(6, 8);
  g.add_edge(7, 8, 2);
  g.add_edge(1, 9);
  g.add_edge(9, 10);
  g.add_edge(9, 11);
  g.add_edge(10, 11, 2);
  return g;
}

/// Q_d on 2^d vertices; x ~ y iff they differ in exactly one bit.
inline Multigraph hypercube(int d) {
  if (d < 0 || d > 20) throw std::invalid_argument("hypercube: bad dimension");
  Multigraph g(1 << d);
  for (int x = 0; x < (1 << d); ++x)
    for (int b = 0; b < d; ++b)
      if (!(x & (1 << b))) g.add_edge(x, x | (1 << b));
  return g;
}

/// Uniform labeled tree by Pruefer decoding; deterministic in the seed.
inline Multigraph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: order must be >= 1");
  Multigraph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  DetRng rng(seed);
  std::vector<int> seq(n - 2);
  for (auto &x : seq) x = rng.below(n);
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  for (int x : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    g.add_edge(leaf, x);
    if (--deg[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  g.add_edge(a, b);
  return g;
}

/// Connected loop-free cubic multigraph by the configuration model with
/// rejection; deterministic in the seed.
inline Multigraph random_cubic_multigraph(int n, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument(
        "random_cubic_multigraph: order must be even and >= 2");
  DetRng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(3 * n);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < 3; ++i) stubs.push_back(v);
    rng.shuffle(stubs);
    bool loop = false;
    for (std::size_t i = 0; i < stubs.size(); i += 2)
      if (stubs[i] == stubs[i + 1]) {
        loop = true;
        break;
      }
    if (loop) continue;
    Multigraph g(n);
    for (std::size_t i = 0; i < stubs.size(); i += 2)
      g.add_edge(stubs[i], stubs[i + 1]);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_cubic_multigraph: rejection limit reached");
}

/// String-keyed generator dispatch used by the CLI. triangle_expansion is not
/// here because it takes a graph argument rather than numbers.
inline Multigraph generate(const std::string &family,
                           const std::vector<long> &params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("generate: family '" + family + "' expects " +
                                  std::to_string(k) + " parameter(s)");
  };
  if (family == "path") {
    want(1);
    return path_graph((int)params[0]);
  }
  if (family == "cycle") {
    want(1);
    return cycle_graph((int)params[0]);
  }
  if (family == "complete") {
    want(1);
    return complete_graph((int)params[0]);
  }
  if (family == "complete_bipartite") {
    want(2);
    return complete_bipartite((int)params[0], (int)params[1]);
  }
  if (family == "star") {
    want(1);
    return star_graph((int)params[0]);
  }
  if (family == "double_star") {
    want(2);
    return double_star((int)params[0], (int)params[1]);
  }
  if (family == "diamond_necklace") {
    want(1);
    return diamond_necklace((int)params[0]);
  }
  if (family == "ring_of_diamonds") {
    want(1);
    return ring_of_diamonds((int)params[0]);
  }
  if (family == "figure1") {
    want(0);
    return figure1_graph();
  }
  if (family == "figure2_g0") {
    want(0);
    return figure2_g0_graph();
  }
  if (family == "hypercube") {
    want(1);
    return hypercube((int)params[0]);
  }
  if (family == "random_tree") {
    want(2);
    return random_tree((int)params[0], (std::uint64_t)params[1]);
  }
  if (family == "random_cubic_multigraph") {
    want(2);
    return random_cubic_multigraph((int)params[0], (std::uint64_t)params[1]);
  }
  throw std::invalid_argument("generate: unknown family '" + family + "'");
}

namespace detail {

inline std::string ahu_encode(const std::vector<std::vector<int>> &adj, int v,
                              int parent) {
  std::vector<std::string> child;
  for (int w : adj[v])
    if (w != parent) child.push_back(ahu_encode(adj, w, v));
  std::sort(child.begin(), child.end());
  std::string s = "(";
  for (auto &c : child) s += c;
  s += ")";
  return s;
}

/// Center-rooted AHU string; a complete isomorphism invariant for trees.
inline std::string tree_canonical_form(const Multigraph &t) {
  int n = t.order();
  auto adj = t.adjacency();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = (int)adj[v].size();
  std::vector<int> layer;
  std::vector<char> removed(n, false);
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int w : adj[v])
        if (!removed[w] && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);
  if (centers.size() == 1) return "[" + ahu_encode(adj, centers[0], -1) + "]";
  std::string a = ahu_encode(adj, centers[0], centers[1]);
  std::string b = ahu_encode(adj, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

} // namespace detail

/// All non-isomorphic trees on exactly n vertices, grown by leaf attachment
/// with canonical-form deduplication. Counts match the classical sequence
/// 1, 1, 1, 2, 3, 6, 11, 23, 47, 106 up to n = 10.
inline std::vector<Multigraph> all_trees(int n) {
  if (n < 1) throw std::invalid_argument("all_trees: order must be >= 1");
  std::vector<Multigraph> current{Multigraph(1)};
  for (int k = 2; k <= n; ++k) {
    std::vector<Multigraph> grown;
    std::set<std::string> seen;
    for (const auto &t : current)
      for (int v = 0; v < t.order(); ++v) {
        Multigraph bigger(k);
        for (auto &[e, mult] : t.edge_multiplicities())
          bigger.add_edge(e.first, e.second, mult);
        bigger.add_edge(v, k - 1);
        auto form = detail::tree_canonical_form(bigger);
        if (seen.insert(form).second) grown.push_back(std::move(bigger));
      }
    current = std::move(grown);
  }
  return current;
}

} // namespace pdtk
