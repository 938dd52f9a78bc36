#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "poslab/graph.hpp"
#include "poslab/rng.hpp"

namespace poslab {

// Finite witness of an ultimately periodic path: a stem followed by a cycle.
// The stem may be empty; the cycle is nonempty and closes on its first vertex,
// which must be the endpoint of the stem.
struct Lasso {
  std::vector<Edge> stem;
  std::vector<Edge> cycle;

  int start() const { return stem.empty() ? cycle.front().src : stem.front().src; }

  bool well_formed() const {
    if (cycle.empty()) return false;
    int at = start();
    for (const Edge& e : stem) {
      if (e.src != at) return false;
      at = e.dst;
    }
    if (cycle.front().src != at) return false;
    for (const Edge& e : cycle) {
      if (e.src != at) return false;
      at = e.dst;
    }
    return at == cycle.front().src;
  }

  // True when every edge of the lasso is present in g.
  bool replays_in(const Graph& g) const {
    if (!well_formed()) return false;
    for (const Edge& e : stem)
      if (!g.has_edge(e.src, e.letter, e.dst)) return false;
    for (const Edge& e : cycle)
      if (!g.has_edge(e.src, e.letter, e.dst)) return false;
    return true;
  }

  std::vector<Letter> stem_label() const {
    std::vector<Letter> u;
    for (const Edge& e : stem) u.push_back(e.letter);
    return u;
  }

  std::vector<Letter> cycle_label() const {
    std::vector<Letter> v;
    for (const Edge& e : cycle) v.push_back(e.letter);
    return v;
  }
};

// Enumerates every simple cycle (distinct vertices, canonical start at the
// least vertex on the cycle) of length <= max_cycle_len, each packaged as a
// lasso with an empty stem. Deterministic order.
inline std::vector<Lasso> enumerate_lassos(const Graph& g, int max_cycle_len) {
  require_valid(g, "enumerate_lassos");
  std::vector<Lasso> out;
  auto oidx = g.out_index();
  std::vector<Edge> path;
  std::vector<bool> used(static_cast<size_t>(g.n), false);

  std::function<void(int, int)> extend = [&](int root, int at) {
    for (int ei : oidx[static_cast<size_t>(at)]) {
      const Edge& e = g.edges[static_cast<size_t>(ei)];
      if (e.dst == root) {
        path.push_back(e);
        out.push_back(Lasso{{}, path});
        path.pop_back();
        continue;
      }
      if (static_cast<int>(path.size()) + 1 >= max_cycle_len) continue;
      if (e.dst < root || used[static_cast<size_t>(e.dst)]) continue;
      used[static_cast<size_t>(e.dst)] = true;
      path.push_back(e);
      extend(root, e.dst);
      path.pop_back();
      used[static_cast<size_t>(e.dst)] = false;
    }
  };

  for (int root = 0; root < g.n; ++root) {
    if (max_cycle_len < 1) break;
    used.assign(static_cast<size_t>(g.n), false);
    used[static_cast<size_t>(root)] = true;
    extend(root, root);
  }
  return out;
}

// Random lasso: walk `stem_len` steps from a random vertex, then walk until a
// vertex repeats; the repeated segment is the cycle.
inline Lasso random_lasso(const Graph& g, Rng& rng, int stem_len) {
  require_valid(g, "random_lasso");
  auto oidx = g.out_index();
  auto step = [&](int v) -> Edge {
    const auto& outs = oidx[static_cast<size_t>(v)];
    return g.edges[static_cast<size_t>(outs[rng.below(outs.size())])];
  };
  Lasso l;
  int at = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n)));
  for (int i = 0; i < stem_len; ++i) {
    Edge e = step(at);
    l.stem.push_back(e);
    at = e.dst;
  }
  std::vector<int> seen_pos(static_cast<size_t>(g.n), -1);
  std::vector<Edge> walk;
  seen_pos[static_cast<size_t>(at)] = 0;
  for (;;) {
    Edge e = step(at);
    walk.push_back(e);
    at = e.dst;
    int pos = seen_pos[static_cast<size_t>(at)];
    if (pos >= 0) {
      // stem absorbs walk[0..pos), cycle is walk[pos..]
      for (int i = 0; i < pos; ++i) l.stem.push_back(walk[static_cast<size_t>(i)]);
      l.cycle.assign(walk.begin() + pos, walk.end());
      return l;
    }
    seen_pos[static_cast<size_t>(at)] = static_cast<int>(walk.size());
  }
}

}  // namespace poslab
