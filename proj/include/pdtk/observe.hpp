#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdtk/multigraph.hpp"

namespace pdtk {

/// vertex: the simplified rules (domination step, then "only unobserved
/// neighbor" propagation); simple graphs only.
/// edge: the original rules labeling vertices and edges, where each parallel
/// edge counts separately in the k-1-of-k rule; accepts multigraphs.
enum class ObservationModel { vertex, edge };

inline const char *to_string(ObservationModel m) {
  return m == ObservationModel::vertex ? "vertex" : "edge";
}

enum class VertexRule : std::uint8_t {
  seed,           // member of S
  dominated,      // neighbor of S in the domination step (vertex model)
  edge_incidence, // incident to an observed edge (edge model)
  propagation     // only unobserved neighbor of an observed vertex
};

enum class EdgeRule : std::uint8_t {
  seed_incident,    // incident to a member of S at initialization
  between_observed, // joins two observed vertices
  k_minus_one       // last unobserved edge at a vertex of degree k > 1
};

struct VertexEvent {
  int v;
  VertexRule rule;
  int witness; // seed: -1; dominated/propagation: a vertex; edge_incidence: instance id
  bool operator==(const VertexEvent &) const = default;
};

struct EdgeEvent {
  int instance;
  EdgeRule rule;
  int witness; // seed_incident: the seed; between_observed: -1; k_minus_one: the pivot vertex
  bool operator==(const EdgeEvent &) const = default;
};

struct TraceRound {
  std::vector<VertexEvent> vertex_events;
  std::vector<EdgeEvent> edge_events;
  bool operator==(const TraceRound &) const = default;
};

/// Timestamped record of a whole observation run. Round 0 is the domination
/// step (just S for zero forcing); later rounds fire everything enabled by
/// the previous round's state at once, so the record is canonical.
struct ObservationTrace {
  ObservationModel model = ObservationModel::vertex;
  bool domination_step = true;
  std::vector<int> seeds;
  std::vector<TraceRound> rounds;
  std::vector<char> observed_vertices;
  std::vector<char> observed_edges; // by instance id; empty in vertex model

  bool all_vertices_observed() const {
    for (char c : observed_vertices)
      if (!c) return false;
    return true;
  }
  std::vector<int> observed_vertex_list() const {
    std::vector<int> out;
    for (int v = 0; v < (int)observed_vertices.size(); ++v)
      if (observed_vertices[v]) out.push_back(v);
    return out;
  }
  bool operator==(const ObservationTrace &) const = default;
};

namespace detail {

inline std::vector<int> checked_seed_set(const Multigraph &g,
                                         std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s)
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("seed set: vertex out of range");
  return s;
}

inline ObservationTrace vertex_model_closure(const Multigraph &g,
                                             std::vector<int> seeds,
                                             bool domination_step) {
  if (!g.simple())
    throw std::invalid_argument(
        "vertex model requires a simple graph; use the edge model on multigraphs");
  ObservationTrace t;
  t.model = ObservationModel::vertex;
  t.domination_step = domination_step;
  t.seeds = std::move(seeds);
  t.observed_vertices.assign(g.order(), false);
  auto adj = g.adjacency();

  TraceRound r0;
  for (int s : t.seeds) r0.vertex_events.push_back({s, VertexRule::seed, -1});
  if (domination_step) {
    std::vector<char> seeded(g.order(), false);
    for (int s : t.seeds) seeded[s] = true;
    std::vector<int> witness(g.order(), -1);
    for (int s : t.seeds)
      for (int w : adj[s])
        if (!seeded[w] && witness[w] < 0) witness[w] = s;
    for (int w = 0; w < g.order(); ++w)
      if (witness[w] >= 0)
        r0.vertex_events.push_back({w, VertexRule::dominated, witness[w]});
  }
  for (auto &ev : r0.vertex_events) t.observed_vertices[ev.v] = true;
  t.rounds.push_back(std::move(r0));

  while (true) {
    // all events are judged against the state before this round
    std::vector<int> forcer(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
      if (!t.observed_vertices[v]) continue;
      int unobserved = -1, count = 0;
      for (int w : adj[v])
        if (!t.observed_vertices[w]) {
          unobserved = w;
          ++count;
        }
      if (count == 1 && forcer[unobserved] < 0) forcer[unobserved] = v;
    }
    TraceRound round;
    for (int w = 0; w < g.order(); ++w)
      if (forcer[w] >= 0)
        round.vertex_events.push_back({w, VertexRule::propagation, forcer[w]});
    if (round.vertex_events.empty()) break;
    for (auto &ev : round.vertex_events) t.observed_vertices[ev.v] = true;
    t.rounds.push_back(std::move(round));
  }
  return t;
}

inline ObservationTrace edge_model_closure(const Multigraph &g,
                                           std::vector<int> seeds) {
  ObservationTrace t;
  t.model = ObservationModel::edge;
  t.domination_step = true;
  t.seeds = std::move(seeds);
  t.observed_vertices.assign(g.order(), false);
  auto inst = g.edge_instances();
  auto inc = g.incidence_lists();
  t.observed_edges.assign(inst.size(), false);
  std::vector<char> in_seed(g.order(), false);
  for (int s : t.seeds) in_seed[s] = true;

  TraceRound r0;
  for (int s : t.seeds) r0.vertex_events.push_back({s, VertexRule::seed, -1});
  for (int e = 0; e < (int)inst.size(); ++e) {
    int a = inst[e].first, b = inst[e].second;
    if (in_seed[a] || in_seed[b]) {
      int witness = in_seed[a] ? (in_seed[b] ? std::min(a, b) : a) : b;
      r0.edge_events.push_back({e, EdgeRule::seed_incident, witness});
    }
  }
  for (auto &ev : r0.vertex_events) t.observed_vertices[ev.v] = true;
  for (auto &ev : r0.edge_events) t.observed_edges[ev.instance] = true;
  t.rounds.push_back(std::move(r0));

  while (true) {
    TraceRound round;
    // vertices incident to an observed edge
    for (int v = 0; v < g.order(); ++v) {
      if (t.observed_vertices[v]) continue;
      for (int e : inc[v])
        if (t.observed_edges[e]) {
          round.vertex_events.push_back({v, VertexRule::edge_incidence, e});
          break;
        }
    }
    // edges between observed vertices, then the k-1-of-k rule; the first
    // applicable rule is recorded when both would fire
    std::vector<int> pivot(inst.size(), -1);
    for (int v = 0; v < g.order(); ++v) {
      int k = (int)inc[v].size();
      if (k <= 1) continue;
      int unobserved = -1, count = 0;
      for (int e : inc[v])
        if (!t.observed_edges[e]) {
          unobserved = e;
          ++count;
        }
      if (count == 1 && pivot[unobserved] < 0) pivot[unobserved] = v;
    }
    for (int e = 0; e < (int)inst.size(); ++e) {
      if (t.observed_edges[e]) continue;
      if (t.observed_vertices[inst[e].first] &&
          t.observed_vertices[inst[e].second])
        round.edge_events.push_back({e, EdgeRule::between_observed, -1});
      else if (pivot[e] >= 0)
        round.edge_events.push_back({e, EdgeRule::k_minus_one, pivot[e]});
    }
    if (round.vertex_events.empty() && round.edge_events.empty()) break;
    for (auto &ev : round.vertex_events) t.observed_vertices[ev.v] = true;
    for (auto &ev : round.edge_events) t.observed_edges[ev.instance] = true;
    t.rounds.push_back(std::move(round));
  }
  return t;
}

} // namespace detail

/// Domination step plus propagation to the fixed point, with a full trace.
inline ObservationTrace power_dominating_closure(const Multigraph &g,
                                                 const std::vector<int> &s,
                                                 ObservationModel model) {
  auto seeds = detail::checked_seed_set(g, s);
  if (model == ObservationModel::vertex)
    return detail::vertex_model_closure(g, std::move(seeds), true);
  return detail::edge_model_closure(g, std::move(seeds));
}

/// Propagation-only fixed point starting from exactly s; simple graphs only.
inline ObservationTrace zero_forcing_closure(const Multigraph &g,
                                             const std::vector<int> &s) {
  return detail::vertex_model_closure(g, detail::checked_seed_set(g, s), false);
}

struct Rational {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rational &) const = default;
};

struct GraphFingerprint {
  int order = 0;
  int size = 0;
  std::uint64_t hash = 0;

  static GraphFingerprint of(const Multigraph &g) {
    return {g.order(), g.size(), g.canonical_hash()};
  }
  bool matches(const Multigraph &g) const { return *this == of(g); }
  bool operator==(const GraphFingerprint &) const = default;
};

/// A vertex set, the bound it claims, and the replayable trace proving that
/// it power dominates the fingerprinted graph.
struct PdsCertificate {
  GraphFingerprint graph;
  ObservationModel model = ObservationModel::vertex;
  std::vector<int> set;
  Rational bound;
  ObservationTrace trace;
};

/// True iff the closure observes every vertex; fills a certificate claiming
/// the trivial bound |s| when one is requested.
inline bool is_power_dominating(const Multigraph &g, const std::vector<int> &s,
                                ObservationModel model,
                                PdsCertificate *certificate = nullptr) {
  auto trace = power_dominating_closure(g, s, model);
  if (!trace.all_vertices_observed()) return false;
  if (certificate) {
    certificate->graph = GraphFingerprint::of(g);
    certificate->model = model;
    certificate->set = trace.seeds;
    certificate->bound = {(long long)trace.seeds.size(), 1};
    certificate->trace = std::move(trace);
  }
  return true;
}

/// Strict replay: the certificate must fingerprint the graph, respect its
/// claimed bound, reproduce the recomputed trace event for event, and observe
/// everything. Returns an explanation for the first failure.
inline std::pair<bool, std::string> verify_certificate(const PdsCertificate &c,
                                                       const Multigraph &g) {
  if (!c.graph.matches(g)) return {false, "graph fingerprint mismatch"};
  if (c.bound.den <= 0) return {false, "malformed bound"};
  for (int v : c.set)
    if (v < 0 || v >= g.order()) return {false, "set vertex out of range"};
  if ((long long)c.set.size() * c.bound.den > c.bound.num)
    return {false, "set larger than the claimed bound"};
  ObservationTrace replay;
  try {
    replay = power_dominating_closure(g, c.set, c.model);
  } catch (const std::exception &e) {
    return {false, std::string("closure rejected the certificate: ") + e.what()};
  }
  if (!(replay == c.trace)) return {false, "trace does not replay"};
  if (!replay.all_vertices_observed())
    return {false, "closure does not observe every vertex"};
  return {true, ""};
}

} // namespace pdtk
