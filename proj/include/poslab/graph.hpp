#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poslab/alphabet.hpp"

namespace poslab {

struct Edge {
  int src = 0;
  Letter letter = 0;
  int dst = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Edge-labelled directed graph over a finite alphabet. Every vertex must
// have at least one outgoing edge (sinkless); edges are kept sorted and
// duplicate-free so all iteration is deterministic.
struct Graph {
  Alphabet alphabet;
  int n = 0;                       // vertices are 0..n-1
  std::vector<Edge> edges;         // sorted, unique
  std::vector<std::string> names;  // optional display names, size n or empty

  const std::string& vertex_name(int v) const {
    static const std::string empty;
    if (v >= 0 && static_cast<size_t>(v) < names.size()) return names[static_cast<size_t>(v)];
    return empty;
  }

  std::string display_name(int v) const {
    const std::string& s = vertex_name(v);
    return s.empty() ? ("v" + std::to_string(v)) : s;
  }

  void normalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }

  bool has_edge(int src, Letter c, int dst) const {
    Edge e{src, c, dst};
    return std::binary_search(edges.begin(), edges.end(), e);
  }

  std::vector<Edge> out_edges(int v) const {
    std::vector<Edge> out;
    for (const Edge& e : edges)
      if (e.src == v) out.push_back(e);
    return out;
  }

  // out[v] = indices into `edges` of edges leaving v.
  std::vector<std::vector<int>> out_index() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(n));
    for (size_t i = 0; i < edges.size(); ++i)
      out[static_cast<size_t>(edges[i].src)].push_back(static_cast<int>(i));
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.alphabet == b.alphabet && a.n == b.n && a.edges == b.edges;
  }
};

inline Graph make_graph(Alphabet alphabet, int n, std::vector<Edge> edges,
                        std::vector<std::string> names = {}) {
  Graph g{std::move(alphabet), n, std::move(edges), std::move(names)};
  g.normalize();
  return g;
}

// Validation report for the structural graph invariants.
struct GraphReport {
  std::vector<int> sinks;                 // vertices with no outgoing edge
  std::vector<Edge> bad_letters;          // edges whose letter is out of range
  std::vector<Edge> bad_endpoints;        // edges with out-of-range endpoints
  bool ok() const { return sinks.empty() && bad_letters.empty() && bad_endpoints.empty(); }
};

inline GraphReport validate_graph(const Graph& g) {
  GraphReport r;
  std::vector<bool> has_out(static_cast<size_t>(g.n), false);
  for (const Edge& e : g.edges) {
    if (e.src < 0 || e.src >= g.n || e.dst < 0 || e.dst >= g.n) {
      r.bad_endpoints.push_back(e);
      continue;
    }
    if (e.letter < 0 || e.letter >= g.alphabet.size()) {
      r.bad_letters.push_back(e);
      continue;
    }
    has_out[static_cast<size_t>(e.src)] = true;
  }
  for (int v = 0; v < g.n; ++v)
    if (!has_out[static_cast<size_t>(v)]) r.sinks.push_back(v);
  return r;
}

inline void require_valid(const Graph& g, const char* ctx) {
  GraphReport r = validate_graph(g);
  if (!r.ok()) throw std::invalid_argument(std::string(ctx) + ": invalid graph");
}

// Vertices reachable from `from` (always includes `from`).
inline std::vector<bool> reachable_from(const Graph& g, int from) {
  std::vector<bool> seen(static_cast<size_t>(g.n), false);
  std::vector<int> stack{from};
  seen[static_cast<size_t>(from)] = true;
  auto out = g.out_index();
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int ei : out[static_cast<size_t>(v)]) {
      int w = g.edges[static_cast<size_t>(ei)].dst;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// Graph with a strict total order on vertices, given by ranks. rank[v] is the
// position of v; larger rank means bigger vertex.
struct OrderedGraph {
  Graph graph;
  std::vector<int> rank;  // permutation of 0..n-1

  bool rank_valid() const {
    if (static_cast<int>(rank.size()) != graph.n) return false;
    std::vector<bool> seen(static_cast<size_t>(graph.n), false);
    for (int r : rank) {
      if (r < 0 || r >= graph.n || seen[static_cast<size_t>(r)]) return false;
      seen[static_cast<size_t>(r)] = true;
    }
    return true;
  }
};

// Monotonicity: for every edge u -c-> u', every v >= u and v' <= u', the
// edge v -c-> v' must be present. Returns the first missing triple in
// (rank-descending source, letter, rank-ascending target) scan order, or
// nullopt when monotone.
inline std::optional<Edge> check_monotone(const OrderedGraph& og) {
  const Graph& g = og.graph;
  if (!og.rank_valid()) throw std::invalid_argument("check_monotone: invalid rank");
  // by_rank[r] = vertex with rank r
  std::vector<int> by_rank(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) by_rank[static_cast<size_t>(og.rank[static_cast<size_t>(v)])] = v;
  for (const Edge& e : g.edges) {
    int ru = og.rank[static_cast<size_t>(e.src)];
    int ru2 = og.rank[static_cast<size_t>(e.dst)];
    for (int rv = g.n - 1; rv >= ru; --rv) {
      int v = by_rank[static_cast<size_t>(rv)];
      for (int rv2 = 0; rv2 <= ru2; ++rv2) {
        int v2 = by_rank[static_cast<size_t>(rv2)];
        if (!g.has_edge(v, e.letter, v2)) return Edge{v, e.letter, v2};
      }
    }
  }
  return std::nullopt;
}

// Adds every edge demanded by monotonicity. A single pass over the original
// edges suffices: an edge added for (u -c-> u') only demands edges already
// demanded by (u -c-> u').
inline OrderedGraph monotone_closure(OrderedGraph og) {
  const Graph& g = og.graph;
  std::vector<int> by_rank(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) by_rank[static_cast<size_t>(og.rank[static_cast<size_t>(v)])] = v;
  std::vector<Edge> added;
  for (const Edge& e : g.edges) {
    int ru = og.rank[static_cast<size_t>(e.src)];
    int ru2 = og.rank[static_cast<size_t>(e.dst)];
    for (int rv = ru; rv < g.n; ++rv)
      for (int rv2 = 0; rv2 <= ru2; ++rv2)
        added.push_back(Edge{by_rank[static_cast<size_t>(rv)], e.letter, by_rank[static_cast<size_t>(rv2)]});
  }
  og.graph.edges.insert(og.graph.edges.end(), added.begin(), added.end());
  og.graph.normalize();
  return og;
}

// Graph morphism source -> target: map preserves every labelled edge.
struct Morphism {
  std::vector<int> map;  // indexed by source vertex

  int operator()(int v) const { return map.at(static_cast<size_t>(v)); }
};

// Returns the first source edge whose image is missing in the target, or
// nullopt when `m` is a valid morphism.
inline std::optional<Edge> morphism_violation(const Graph& source, const Graph& target,
                                              const Morphism& m) {
  if (m.map.size() != static_cast<size_t>(source.n)) return Edge{-1, 0, -1};
  for (int v : m.map)
    if (v < 0 || v >= target.n) return Edge{-1, 0, -1};
  for (const Edge& e : source.edges) {
    // Letters are matched by symbol so graphs over embedded alphabets compose.
    auto c = target.alphabet.find(source.alphabet.name(e.letter));
    if (!c || !target.has_edge(m(e.src), *c, m(e.dst))) return e;
  }
  return std::nullopt;
}

inline bool is_morphism(const Graph& source, const Graph& target, const Morphism& m) {
  return !morphism_violation(source, target, m).has_value();
}

}  // namespace poslab
