#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "poslab/cycles.hpp"
#include "poslab/graph.hpp"
#include "poslab/scc.hpp"

namespace poslab {

// Detects a cycle with positive total weight, Bellman-Ford style: relax
// longest distances for |V| rounds from an all-zero start; a further
// relaxable edge witnesses a positive cycle, extracted by walking
// predecessors. The extracted cycle is re-checked; the rare failure path
// falls back to enumerating simple cycles (a positive simple cycle exists
// whenever any positive cycle does, by cycle decomposition).
inline std::optional<std::vector<Edge>> find_positive_cycle(
    const Graph& g, const std::function<long long(const Edge&)>& weight) {
  if (g.n == 0) return std::nullopt;
  std::vector<long long> dist(static_cast<size_t>(g.n), 0);
  std::vector<int> pred(static_cast<size_t>(g.n), -1);  // edge index
  int touched = -1;
  for (int round = 0; round <= g.n; ++round) {
    touched = -1;
    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
      const Edge& e = g.edges[ei];
      long long cand = dist[static_cast<size_t>(e.src)] + weight(e);
      if (cand > dist[static_cast<size_t>(e.dst)]) {
        dist[static_cast<size_t>(e.dst)] = cand;
        pred[static_cast<size_t>(e.dst)] = static_cast<int>(ei);
        touched = e.dst;
      }
    }
    if (touched == -1) return std::nullopt;
  }
  // Walk predecessors n steps to land on a cycle of the predecessor graph.
  int at = touched;
  for (int i = 0; i < g.n; ++i) at = g.edges[static_cast<size_t>(pred[static_cast<size_t>(at)])].src;
  std::vector<Edge> cycle;
  int v = at;
  do {
    const Edge& e = g.edges[static_cast<size_t>(pred[static_cast<size_t>(v)])];
    cycle.push_back(e);
    v = e.src;
  } while (v != at);
  std::reverse(cycle.begin(), cycle.end());
  long long total = 0;
  for (const Edge& e : cycle) total += weight(e);
  if (total > 0) return cycle;

  // Fallback: scan simple cycles.
  for (const Lasso& l : enumerate_lassos(g, g.n)) {
    long long s = 0;
    for (const Edge& e : l.cycle) s += weight(e);
    if (s > 0) return l.cycle;
  }
  return std::nullopt;
}

// Shortest path (edge sequence) from any vertex of `from` to `to`, using only
// edges enabled by `keep`; nullopt when unreachable.
inline std::optional<std::vector<Edge>> bfs_path(const Graph& g, const std::vector<int>& from,
                                                 int to,
                                                 const std::function<bool(const Edge&)>& keep) {
  std::vector<int> pred_edge(static_cast<size_t>(g.n), -2);
  std::deque<int> queue;
  for (int v : from) {
    if (pred_edge[static_cast<size_t>(v)] == -2) {
      pred_edge[static_cast<size_t>(v)] = -1;
      queue.push_back(v);
    }
  }
  auto oidx = g.out_index();
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to) {
      std::vector<Edge> path;
      int at = to;
      while (pred_edge[static_cast<size_t>(at)] >= 0) {
        const Edge& e = g.edges[static_cast<size_t>(pred_edge[static_cast<size_t>(at)])];
        path.push_back(e);
        at = e.src;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int ei : oidx[static_cast<size_t>(v)]) {
      const Edge& e = g.edges[static_cast<size_t>(ei)];
      if (!keep(e)) continue;
      if (pred_edge[static_cast<size_t>(e.dst)] == -2) {
        pred_edge[static_cast<size_t>(e.dst)] = ei;
        queue.push_back(e.dst);
      }
    }
  }
  return std::nullopt;
}

// Finds a cycle through some edge satisfying `marked`, using only edges
// satisfying `keep`; i.e. a marked edge inside an SCC of the kept subgraph,
// completed into a cycle. Returns the cycle's edges.
inline std::optional<std::vector<Edge>> find_cycle_with_marked_edge(
    const Graph& g, const std::function<bool(const Edge&)>& keep,
    const std::function<bool(const Edge&)>& marked) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.n));
  for (const Edge& e : g.edges)
    if (keep(e)) adj[static_cast<size_t>(e.src)].push_back(e.dst);
  SccResult scc = strongly_connected_components(adj);
  for (const Edge& e : g.edges) {
    if (!keep(e) || !marked(e)) continue;
    if (scc.comp[static_cast<size_t>(e.src)] != scc.comp[static_cast<size_t>(e.dst)]) continue;
    if (e.src == e.dst) return std::vector<Edge>{e};
    int comp = scc.comp[static_cast<size_t>(e.src)];
    auto back = bfs_path(g, {e.dst}, e.src, [&](const Edge& f) {
      return keep(f) && scc.comp[static_cast<size_t>(f.src)] == comp &&
             scc.comp[static_cast<size_t>(f.dst)] == comp;
    });
    if (back) {
      std::vector<Edge> cycle{e};
      cycle.insert(cycle.end(), back->begin(), back->end());
      return cycle;
    }
  }
  return std::nullopt;
}

}  // namespace poslab
