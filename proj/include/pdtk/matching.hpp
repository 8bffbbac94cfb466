#pragma once

#include <optional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pdtk/classify.hpp"
#include "pdtk/multigraph.hpp"

namespace pdtk {

/// Pairwise vertex-disjoint edges, canonical order.
struct Matching {
  std::vector<std::pair<int, int>> edges;

  bool covers_all(int n) const { return (int)edges.size() * 2 == n; }
  int mate_of(int v) const {
    for (auto &e : edges) {
      if (e.first == v) return e.second;
      if (e.second == v) return e.first;
    }
    return -1;
  }
};

namespace detail {

/// Edmonds' blossom algorithm for maximum cardinality matching, O(V^3).
/// Operates on simple adjacency lists; the support graph of a multigraph is
/// all that matters for matching.
class BlossomMatcher {
public:
  explicit BlossomMatcher(std::vector<std::vector<int>> adj)
      : adj_(std::move(adj)), n_((int)adj_.size()), match_(n_, -1),
        parent_(n_), base_(n_) {}

  std::vector<int> run() {
    // greedy seed keeps the augmenting phase short; lowest index first
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0)
        for (int u : adj_[v])
          if (match_[u] < 0) {
            match_[v] = u;
            match_[u] = v;
            break;
          }
    for (int v = 0; v < n_; ++v)
      if (match_[v] < 0) augment_from(v);
    return match_;
  }

private:
  void mark_path(std::vector<char> &blossom, int v, int b, int child) {
    while (base_[v] != b) {
      blossom[base_[v]] = true;
      blossom[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int lca(int a, int b) {
    std::vector<char> used(n_, false);
    for (int v = a;; v = parent_[match_[v]]) {
      v = base_[v];
      used[v] = true;
      if (match_[v] < 0) break;
    }
    for (int v = b;;) {
      v = base_[v];
      if (used[v]) return v;
      v = parent_[match_[v]];
    }
  }

  void augment_from(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    std::vector<char> in_queue(n_, false);
    std::queue<int> q;
    q.push(root);
    in_queue[root] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : adj_[v]) {
        if (base_[v] == base_[u] || match_[v] == u) continue;
        if (u == root || (match_[u] >= 0 && parent_[match_[u]] >= 0)) {
          // odd cycle: contract the blossom
          int b = lca(v, u);
          std::vector<char> blossom(n_, false);
          mark_path(blossom, v, b, u);
          mark_path(blossom, u, b, v);
          for (int i = 0; i < n_; ++i)
            if (blossom[base_[i]]) {
              base_[i] = b;
              if (!in_queue[i]) {
                in_queue[i] = true;
                q.push(i);
              }
            }
        } else if (parent_[u] < 0) {
          parent_[u] = v;
          if (match_[u] < 0) {
            // augmenting path found; flip it
            int w = u;
            while (w >= 0) {
              int pv = parent_[w], ppv = match_[pv];
              match_[w] = pv;
              match_[pv] = w;
              w = ppv;
            }
            return;
          }
          if (!in_queue[match_[u]]) {
            in_queue[match_[u]] = true;
            q.push(match_[u]);
          }
        }
      }
    }
  }

  std::vector<std::vector<int>> adj_;
  int n_;
  std::vector<int> match_, parent_, base_;
};

} // namespace detail

/// Maximum cardinality matching of the support graph with forbidden pairs
/// removed before the search.
inline Matching maximum_matching(const Multigraph &g,
                                 const std::vector<std::pair<int, int>> &forbidden = {}) {
  auto banned = [&forbidden](int u, int v) {
    for (auto &f : forbidden)
      if ((f.first == u && f.second == v) || (f.first == v && f.second == u))
        return true;
    return false;
  };
  std::vector<std::vector<int>> adj(g.order());
  for (auto &[e, mult] : g.edge_multiplicities())
    if (!banned(e.first, e.second)) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
  auto mate = detail::BlossomMatcher(std::move(adj)).run();
  Matching m;
  for (int v = 0; v < g.order(); ++v)
    if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
  return m;
}

/// Perfect matching avoiding the forbidden pairs, or nullopt when none
/// exists. Absence is a value, not an error.
inline std::optional<Matching>
perfect_matching(const Multigraph &g,
                 const std::vector<std::pair<int, int>> &forbidden = {}) {
  Matching m = maximum_matching(g, forbidden);
  if (!m.covers_all(g.order())) return std::nullopt;
  return m;
}

/// Vertex-disjoint cycle cover. Cycles are vertex sequences; a length-2 cycle
/// uses two parallel instances of a doubled edge. Cycles are listed by lowest
/// contained vertex and start at that vertex.
struct TwoFactor {
  std::vector<std::vector<int>> cycles;

  std::vector<int> cycle_of(int n) const {
    std::vector<int> owner(n, -1);
    for (std::size_t c = 0; c < cycles.size(); ++c)
      for (int v : cycles[c]) owner[v] = (int)c;
    return owner;
  }
};

/// Checks the 2-factor invariants against its host graph: vertex-disjoint
/// cycles covering V, consecutive pairs are edges, every vertex has exactly
/// two factor incidences (a 2-cycle needs a doubled edge).
inline bool verify_two_factor(const Multigraph &g, const TwoFactor &f) {
  std::vector<char> seen(g.order(), false);
  for (auto &cyc : f.cycles) {
    if (cyc.size() < 2) return false;
    for (int v : cyc) {
      if (v < 0 || v >= g.order() || seen[v]) return false;
      seen[v] = true;
    }
    if (cyc.size() == 2) {
      if (g.multiplicity(cyc[0], cyc[1]) < 2) return false;
    } else {
      for (std::size_t i = 0; i < cyc.size(); ++i)
        if (!g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
    }
  }
  for (int v = 0; v < g.order(); ++v)
    if (!seen[v]) return false;
  return true;
}

namespace detail {

/// Factor instance ids = all edge instances minus one instance per matching
/// edge (the lowest instance id of the pair).
inline std::vector<int> factor_instances(const Multigraph &g, const Matching &m) {
  auto inst = g.edge_instances();
  std::vector<char> removed(inst.size(), false);
  for (auto &e : m.edges) {
    auto key = e.first < e.second ? e : std::make_pair(e.second, e.first);
    for (std::size_t i = 0; i < inst.size(); ++i)
      if (inst[i] == key && !removed[i]) {
        removed[i] = true;
        break;
      }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < inst.size(); ++i)
    if (!removed[i]) out.push_back((int)i);
  return out;
}

/// Decomposes a 2-regular instance set into cycles: start each cycle at its
/// lowest vertex and leave along the lowest unused instance.
inline std::vector<std::vector<int>>
cycles_from_instances(const Multigraph &g, const std::vector<int> &ids,
                      std::vector<std::vector<int>> *instance_cycles = nullptr) {
  auto inst = g.edge_instances();
  std::vector<std::vector<int>> at(g.order());
  for (int id : ids) {
    at[inst[id].first].push_back(id);
    at[inst[id].second].push_back(id);
  }
  for (auto &a : at)
    if (!a.empty() && a.size() != 2)
      throw std::logic_error("cycles_from_instances: instance set is not 2-regular");
  std::vector<char> used(inst.size(), false);
  std::vector<std::vector<int>> cycles;
  for (int s = 0; s < g.order(); ++s) {
    if (at[s].empty() || used[at[s][0]]) continue;
    std::vector<int> cyc, icyc;
    int v = s;
    while (true) {
      cyc.push_back(v);
      int next_id = -1;
      for (int id : at[v])
        if (!used[id]) {
          next_id = id;
          break;
        }
      if (next_id < 0) break;
      used[next_id] = true;
      icyc.push_back(next_id);
      v = inst[next_id].first == v ? inst[next_id].second : inst[next_id].first;
      if (v == s) break;
    }
    cycles.push_back(cyc);
    if (instance_cycles) instance_cycles->push_back(icyc);
  }
  return cycles;
}

} // namespace detail

/// 2-factor of a bridgeless cubic multigraph as the complement of a perfect
/// matching; with `required` set the factor is forced through that edge by
/// forbidding its pair in the matching (the 2-edge-connected even-order case
/// always admits one).
inline TwoFactor two_factor(const Multigraph &g,
                            std::optional<std::pair<int, int>> required = {},
                            Matching *matching_out = nullptr,
                            std::vector<std::vector<int>> *instance_cycles = nullptr) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 3)
      throw std::invalid_argument("two_factor: graph must be cubic");
  if (!detail::bridges_unchecked(g).empty())
    throw std::invalid_argument("two_factor: graph must be bridgeless");
  std::vector<std::pair<int, int>> forbidden;
  if (required) {
    if (!g.adjacent(required->first, required->second))
      throw std::invalid_argument("two_factor: required edge not in graph");
    if (!two_edge_connected(g))
      throw std::invalid_argument(
          "two_factor: required edge needs a 2-edge-connected host");
    // a doubled pair keeps an instance in the factor under any matching;
    // only a multiplicity-1 edge has to be kept away from the matching
    if (g.multiplicity(required->first, required->second) == 1)
      forbidden.push_back(*required);
  }
  auto m = perfect_matching(g, forbidden);
  if (!m)
    throw std::logic_error(
        "two_factor: no perfect matching avoiding the forbidden edges; "
        "host violates the preconditions");
  if (matching_out) *matching_out = *m;
  TwoFactor f;
  f.cycles = detail::cycles_from_instances(g, detail::factor_instances(g, *m),
                                           instance_cycles);
  if (!verify_two_factor(g, f))
    throw std::logic_error("two_factor: produced factor failed verification");
  return f;
}

} // namespace pdtk
