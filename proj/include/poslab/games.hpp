#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poslab/automaton.hpp"
#include "poslab/cycles.hpp"
#include "poslab/graph.hpp"
#include "poslab/objectives.hpp"
#include "poslab/parity.hpp"

namespace poslab {

// Arena: a graph with an Eve/Adam partition of the vertices.
struct Arena {
  Graph graph;
  std::vector<bool> eve;

  bool valid() const {
    return validate_graph(graph).ok() && eve.size() == static_cast<size_t>(graph.n);
  }
};

inline void require_valid(const Arena& a, const char* ctx) {
  if (!a.valid()) throw std::invalid_argument(std::string(ctx) + ": invalid arena");
}

// A strategy for Eve: a graph with a surjective morphism into the arena that
// keeps all of Adam's alternatives available.
struct Strategy {
  Graph graph;
  Morphism morphism;
};

// Eve strategy given by a subset of arena edges: every Eve vertex keeps at
// least one outgoing edge, every Adam vertex keeps all of them.
struct PositionalStrategy {
  std::vector<Edge> kept_edges;
};

inline Graph kept_graph(const Arena& a, const PositionalStrategy& s) {
  Graph g;
  g.alphabet = a.graph.alphabet;
  g.n = a.graph.n;
  g.names = a.graph.names;
  g.edges = s.kept_edges;
  g.normalize();
  return g;
}

inline Strategy as_strategy(const Arena& a, const PositionalStrategy& s) {
  Strategy st;
  st.graph = kept_graph(a, s);
  st.morphism.map.resize(static_cast<size_t>(a.graph.n));
  for (int v = 0; v < a.graph.n; ++v) st.morphism.map[static_cast<size_t>(v)] = v;
  return st;
}

struct StrategyReport {
  bool ok = false;
  std::string problem;
  std::optional<Lasso> losing;
};

inline StrategyReport check_strategy(const Arena& a, const Strategy& s, const Objective& w) {
  require_valid(a, "check_strategy");
  StrategyReport rep;
  GraphReport gr = validate_graph(s.graph);
  if (!gr.ok()) {
    rep.problem = "strategy graph is not a valid sinkless graph";
    return rep;
  }
  if (auto bad = morphism_violation(s.graph, a.graph, s.morphism)) {
    rep.problem = "morphism does not preserve edges";
    return rep;
  }
  std::vector<bool> covered(static_cast<size_t>(a.graph.n), false);
  for (int v : s.morphism.map) covered[static_cast<size_t>(v)] = true;
  for (int v = 0; v < a.graph.n; ++v)
    if (!covered[static_cast<size_t>(v)]) {
      rep.problem = "morphism is not surjective (vertex " + a.graph.display_name(v) + " uncovered)";
      return rep;
    }
  // Adam completeness: every arena alternative at an Adam vertex must be
  // available at every preimage.
  for (int sv = 0; sv < s.graph.n; ++sv) {
    int v = s.morphism(sv);
    if (a.eve[static_cast<size_t>(v)]) continue;
    for (const Edge& e : a.graph.out_edges(v)) {
      bool found = false;
      for (const Edge& se : s.graph.out_edges(sv)) {
        if (se.letter != e.letter) continue;
        if (s.morphism(se.dst) == e.dst &&
            s.graph.alphabet.name(se.letter) == a.graph.alphabet.name(e.letter)) {
          found = true;
          break;
        }
      }
      if (!found) {
        rep.problem = "Adam alternative missing at " + a.graph.display_name(v);
        return rep;
      }
    }
  }
  Satisfaction sat = graph_satisfies(w, s.graph);
  if (!sat.ok) {
    rep.problem = "strategy graph violates the objective";
    rep.losing = sat.violation;
    return rep;
  }
  rep.ok = true;
  return rep;
}

inline std::optional<std::string> positional_violation(const Arena& a,
                                                       const PositionalStrategy& s) {
  std::vector<int> eve_out(static_cast<size_t>(a.graph.n), 0);
  for (const Edge& e : s.kept_edges) {
    if (!a.graph.has_edge(e.src, e.letter, e.dst)) return "kept edge not in arena";
    if (a.eve[static_cast<size_t>(e.src)]) ++eve_out[static_cast<size_t>(e.src)];
  }
  std::vector<int> adam_kept(static_cast<size_t>(a.graph.n), 0);
  for (const Edge& e : s.kept_edges)
    if (!a.eve[static_cast<size_t>(e.src)]) ++adam_kept[static_cast<size_t>(e.src)];
  for (int v = 0; v < a.graph.n; ++v) {
    if (a.eve[static_cast<size_t>(v)]) {
      if (eve_out[static_cast<size_t>(v)] < 1) return "Eve vertex keeps no edge";
    } else {
      int total = static_cast<int>(a.graph.out_edges(v).size());
      if (adam_kept[static_cast<size_t>(v)] != total) return "Adam vertex missing an edge";
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Edge-priority parity games on arenas, solved by subdividing edges so the
// vertex-priority solver applies.
// ---------------------------------------------------------------------------
struct EdgeParitySolution {
  std::vector<bool> eve_wins;
  std::vector<int> eve_choice;   // arena edge index chosen at winning Eve vertices
  std::vector<int> adam_choice;  // arena edge index chosen at winning Adam vertices
};

inline EdgeParitySolution solve_edge_parity(const Arena& a,
                                            const std::function<int(const Edge&)>& prio) {
  require_valid(a, "solve_edge_parity");
  int n = a.graph.n;
  int m = static_cast<int>(a.graph.edges.size());
  ParityGame g;
  g.n = n + m;
  g.eve.assign(static_cast<size_t>(g.n), false);
  g.priority.assign(static_cast<size_t>(g.n), 0);
  g.succ.assign(static_cast<size_t>(g.n), {});
  for (int v = 0; v < n; ++v) g.eve[static_cast<size_t>(v)] = a.eve[static_cast<size_t>(v)];
  for (int ei = 0; ei < m; ++ei) {
    const Edge& e = a.graph.edges[static_cast<size_t>(ei)];
    int mid = n + ei;
    g.priority[static_cast<size_t>(mid)] = prio(e);
    g.succ[static_cast<size_t>(e.src)].push_back(mid);
    g.succ[static_cast<size_t>(mid)].push_back(e.dst);
  }
  ParitySolution ps = solve_parity(g);
  EdgeParitySolution out;
  out.eve_wins.assign(static_cast<size_t>(n), false);
  out.eve_choice.assign(static_cast<size_t>(n), -1);
  out.adam_choice.assign(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    out.eve_wins[static_cast<size_t>(v)] = ps.eve_wins[static_cast<size_t>(v)];
    if (ps.eve_strategy[static_cast<size_t>(v)] >= n)
      out.eve_choice[static_cast<size_t>(v)] = ps.eve_strategy[static_cast<size_t>(v)] - n;
    if (ps.adam_strategy[static_cast<size_t>(v)] >= n)
      out.adam_choice[static_cast<size_t>(v)] = ps.adam_strategy[static_cast<size_t>(v)] - n;
  }
  return out;
}

// Public co-Büchi game: the arena's letters named "F" are the bad ones, Eve
// wins plays with finitely many of them. Returns regions and a positional
// strategy on Eve's region.
struct CoBuchiGameSolution {
  std::vector<bool> eve_region;
  std::vector<int> eve_choice;
  std::vector<int> adam_choice;
};

inline CoBuchiGameSolution solve_cobuchi_game(const Arena& a) {
  auto prio = [&](const Edge& e) { return a.graph.alphabet.name(e.letter) == "F" ? 1 : 0; };
  EdgeParitySolution s = solve_edge_parity(a, prio);
  return CoBuchiGameSolution{s.eve_wins, s.eve_choice, s.adam_choice};
}

// ---------------------------------------------------------------------------
// Energy games: Eve wins from v iff she can keep all prefix sums bounded.
// Least-fixpoint value iteration over {0..cap, top}; f(v) is the least bound
// Eve can guarantee on the peak prefix sum, top meaning none.
// ---------------------------------------------------------------------------
struct EnergySolution {
  std::vector<bool> eve_region;  // f(v) finite
  std::vector<int> eve_choice;   // arena edge index
  std::vector<int> adam_choice;
  std::vector<long long> potential;  // f(v), cap+1 = top
  long long cap = 0;
};

inline EnergySolution solve_energy_game(const Arena& a,
                                        const std::function<long long(const Edge&)>& weight) {
  require_valid(a, "solve_energy_game");
  int n = a.graph.n;
  long long maxw = 1;
  for (const Edge& e : a.graph.edges) maxw = std::max(maxw, std::llabs(weight(e)));
  long long cap = static_cast<long long>(n) * maxw + 1;
  long long top = cap + 1;

  auto oidx = a.graph.out_index();
  std::vector<long long> f(static_cast<size_t>(n), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      bool eve = a.eve[static_cast<size_t>(v)];
      long long best = eve ? top : 0;
      for (int ei : oidx[static_cast<size_t>(v)]) {
        const Edge& e = a.graph.edges[static_cast<size_t>(ei)];
        long long val = f[static_cast<size_t>(e.dst)] >= top
                            ? top
                            : std::max<long long>(0, weight(e) + f[static_cast<size_t>(e.dst)]);
        if (val > cap) val = top;
        if (eve)
          best = std::min(best, val);
        else
          best = std::max(best, val);
      }
      if (best > f[static_cast<size_t>(v)]) {
        f[static_cast<size_t>(v)] = best;
        changed = true;
      }
    }
  }

  EnergySolution out;
  out.cap = cap;
  out.potential = f;
  out.eve_region.assign(static_cast<size_t>(n), false);
  out.eve_choice.assign(static_cast<size_t>(n), -1);
  out.adam_choice.assign(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    out.eve_region[static_cast<size_t>(v)] = f[static_cast<size_t>(v)] < top;
    long long best = -1;
    for (int ei : oidx[static_cast<size_t>(v)]) {
      const Edge& e = a.graph.edges[static_cast<size_t>(ei)];
      long long val = f[static_cast<size_t>(e.dst)] >= top
                          ? top
                          : std::max<long long>(0, weight(e) + f[static_cast<size_t>(e.dst)]);
      if (val > cap) val = top;
      if (a.eve[static_cast<size_t>(v)]) {
        if (out.eve_region[static_cast<size_t>(v)] && val <= f[static_cast<size_t>(v)] &&
            out.eve_choice[static_cast<size_t>(v)] == -1)
          out.eve_choice[static_cast<size_t>(v)] = ei;
      } else {
        if (val > best) {
          best = val;
          out.adam_choice[static_cast<size_t>(v)] = ei;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Products with deterministic priority trackers.
// ---------------------------------------------------------------------------
struct PriorityTracker {
  int n = 0;
  int initial = 0;
  // step[(state, letter)] = (next state, priority emitted)
  std::vector<std::pair<int, int>> step;
  int letters = 0;

  std::pair<int, int> at(int q, Letter c) const {
    return step[static_cast<size_t>(q) * letters + static_cast<size_t>(c)];
  }
};

// Tracker from a deterministic co-Büchi automaton: CoBuchi emits 1, Normal 0;
// letters are matched by symbol against `alphabet`.
inline PriorityTracker tracker_from_recognizer(const CoBuchiAutomaton& d, const Alphabet& alphabet) {
  if (!is_deterministic(d)) throw std::invalid_argument("tracker_from_recognizer: not deterministic");
  PriorityTracker t;
  t.n = d.n;
  t.initial = d.initial;
  t.letters = alphabet.size();
  t.step.assign(static_cast<size_t>(d.n) * alphabet.size(), {-1, 0});
  for (const Transition& tr : d.trans) {
    auto c = alphabet.find(d.alphabet.name(tr.letter));
    if (!c) continue;
    t.step[static_cast<size_t>(tr.src) * alphabet.size() + static_cast<size_t>(*c)] = {
        tr.dst, tr.kind == Kind::CoBuchi ? 1 : 0};
  }
  for (auto& [q, p] : t.step)
    if (q == -1) throw std::invalid_argument("tracker_from_recognizer: alphabet not covered");
  return t;
}

// Büchi tracker for "infinitely many a and infinitely many b": cycles through
// the two requirements and emits priority 2 on completing a round, else 1.
inline PriorityTracker tracker_generalized_buchi(const Objective& w) {
  if (w.cycle_method != CycleMethod::RequiredLetters || w.required_letters.size() != 2)
    throw std::invalid_argument("tracker_generalized_buchi: wrong objective");
  PriorityTracker t;
  t.n = 2;
  t.initial = 0;
  t.letters = w.alphabet.size();
  t.step.assign(2 * static_cast<size_t>(t.letters), {0, 1});
  Letter la = w.required_letters[0], lb = w.required_letters[1];
  for (Letter c = 0; c < t.letters; ++c) {
    t.step[static_cast<size_t>(c)] = {c == la ? 1 : 0, 1};
    t.step[static_cast<size_t>(t.letters) + static_cast<size_t>(c)] =
        (c == lb) ? std::make_pair(0, 2) : std::make_pair(1, 1);
  }
  return t;
}

// Product arena with a deterministic tracker, restricted to the states
// reachable from {(v, initial) : v in arena}. Vertex/edge provenance is kept
// so strategies project back.
struct TrackedProduct {
  Arena arena;                   // labels renamed to the priority digits
  std::vector<int> base_vertex;  // product vertex -> arena vertex
  std::vector<int> tracker_state;
  std::vector<int> edge_base;    // product edge -> base arena edge index
  std::vector<int> start;        // product ids of (v, initial)
};

inline TrackedProduct build_tracked_product(const Arena& a, const PriorityTracker& t) {
  require_valid(a, "build_tracked_product");
  int pn_all = a.graph.n * t.n;
  auto pid = [&](int v, int q) { return v * t.n + q; };
  std::vector<int> remap(static_cast<size_t>(pn_all), -1);
  TrackedProduct p;
  auto oidx = a.graph.out_index();
  std::vector<int> stack;
  auto intern = [&](int v, int q) {
    int& slot = remap[static_cast<size_t>(pid(v, q))];
    if (slot == -1) {
      slot = static_cast<int>(p.base_vertex.size());
      p.base_vertex.push_back(v);
      p.tracker_state.push_back(q);
      stack.push_back(slot);
    }
    return slot;
  };
  for (int v = 0; v < a.graph.n; ++v) p.start.push_back(intern(v, t.initial));

  struct PE {
    Edge e;
    int base;
  };
  std::vector<PE> pedges;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    int v = p.base_vertex[static_cast<size_t>(x)];
    int q = p.tracker_state[static_cast<size_t>(x)];
    for (int ei : oidx[static_cast<size_t>(v)]) {
      const Edge& e = a.graph.edges[static_cast<size_t>(ei)];
      auto [q2, prio] = t.at(q, e.letter);
      int y = intern(e.dst, q2);
      pedges.push_back(PE{Edge{x, prio, y}, ei});
    }
  }

  int maxprio = 0;
  for (const PE& pe : pedges) maxprio = std::max(maxprio, pe.e.letter);
  std::vector<std::string> syms;
  for (int d = 0; d <= maxprio; ++d) syms.push_back(d == 1 ? "F" : (d == 0 ? "N" : std::to_string(d)));
  p.arena.graph.alphabet = Alphabet::symbols(syms);

  std::sort(pedges.begin(), pedges.end(),
            [](const PE& l, const PE& r) { return l.e < r.e || (l.e == r.e && l.base < r.base); });
  pedges.erase(std::unique(pedges.begin(), pedges.end(),
                           [](const PE& l, const PE& r) { return l.e == r.e && l.base == r.base; }),
               pedges.end());
  p.arena.graph.n = static_cast<int>(p.base_vertex.size());
  for (const PE& pe : pedges) {
    p.arena.graph.edges.push_back(pe.e);
    p.edge_base.push_back(pe.base);
  }
  p.arena.eve.resize(static_cast<size_t>(p.arena.graph.n));
  for (int x = 0; x < p.arena.graph.n; ++x)
    p.arena.eve[static_cast<size_t>(x)] = a.eve[static_cast<size_t>(p.base_vertex[static_cast<size_t>(x)])];
  for (int x = 0; x < p.arena.graph.n; ++x)
    p.arena.graph.names.push_back(a.graph.display_name(p.base_vertex[static_cast<size_t>(x)]) + "#" +
                                  std::to_string(p.tracker_state[static_cast<size_t>(x)]));
  return p;
}

// Product where Eve resolves the nondeterminism of a (history-deterministic)
// automaton: an arena move to an intermediate vertex, then Eve picks an
// automaton transition. Used to cross-check the resolver-product route.
inline Arena build_product_eve_resolves(const Arena& a, const CoBuchiAutomaton& aut,
                                        std::vector<int>* start_out) {
  require_valid(a, "build_product_eve_resolves");
  std::vector<int> letter_map(static_cast<size_t>(a.graph.alphabet.size()), -1);
  for (Letter c = 0; c < a.graph.alphabet.size(); ++c) {
    auto t = aut.alphabet.find(a.graph.alphabet.name(c));
    if (!t) throw std::invalid_argument("build_product_eve_resolves: alphabet mismatch");
    letter_map[static_cast<size_t>(c)] = *t;
  }
  // Vertices: (v, q) and ((edge index), q). Build reachable part.
  struct Key {
    int kind;  // 0 = position, 1 = pending edge
    int a, q;
    bool operator<(const Key& o) const {
      if (kind != o.kind) return kind < o.kind;
      if (a != o.a) return a < o.a;
      return q < o.q;
    }
  };
  std::map<Key, int> id;
  std::vector<Key> pool;
  std::vector<int> stack;
  auto intern = [&](Key k) {
    auto [it, fresh] = id.try_emplace(k, static_cast<int>(pool.size()));
    if (fresh) {
      pool.push_back(k);
      stack.push_back(it->second);
    }
    return it->second;
  };
  std::vector<int> starts;
  for (int v = 0; v < a.graph.n; ++v) starts.push_back(intern(Key{0, v, aut.initial}));
  auto aidx = aut.out_index();
  std::vector<Edge> edges;
  std::vector<bool> eve_of;
  auto oidx = a.graph.out_index();
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    Key k = pool[static_cast<size_t>(x)];
    if (k.kind == 0) {
      for (int ei : oidx[static_cast<size_t>(k.a)]) {
        int y = intern(Key{1, ei, k.q});
        edges.push_back(Edge{x, 0, y});
      }
    } else {
      const Edge& e = a.graph.edges[static_cast<size_t>(k.a)];
      Letter ac = letter_map[static_cast<size_t>(e.letter)];
      for (int ti : aidx[static_cast<size_t>(k.q)]) {
        const Transition& t = aut.trans[static_cast<size_t>(ti)];
        if (t.letter != ac) continue;
        int y = intern(Key{0, e.dst, t.dst});
        edges.push_back(Edge{x, t.kind == Kind::CoBuchi ? 1 : 0, y});
      }
    }
  }
  Arena prod;
  prod.graph.alphabet = Alphabet::symbols({"N", "F"});
  prod.graph.n = static_cast<int>(pool.size());
  prod.graph.edges = edges;
  prod.graph.normalize();
  prod.eve.resize(pool.size());
  for (size_t i = 0; i < pool.size(); ++i)
    prod.eve[i] = pool[i].kind == 1 ? true : a.eve[static_cast<size_t>(pool[i].a)];
  if (start_out) *start_out = starts;
  return prod;
}

// ---------------------------------------------------------------------------
// eve_wins: uniform winner computation with certificates.
// ---------------------------------------------------------------------------
struct WinResult {
  bool eve_wins_uniform = false;
  std::vector<bool> eve_region;                      // per arena vertex
  std::optional<PositionalStrategy> positional;      // when the route is positional in the base
  std::optional<Strategy> strategy;                  // general certificate (product routes)
  std::string route;
};

namespace detail {

inline WinResult win_via_tracker(const Arena& a, const PriorityTracker& t, const char* route) {
  TrackedProduct p = build_tracked_product(a, t);
  auto prio = [&](const Edge& e) {
    const std::string& s = p.arena.graph.alphabet.name(e.letter);
    if (s == "N") return 0;
    if (s == "F") return 1;
    return std::stoi(s);
  };
  EdgeParitySolution sol = solve_edge_parity(p.arena, prio);
  WinResult out;
  out.route = route;
  out.eve_region.assign(static_cast<size_t>(a.graph.n), false);
  out.eve_wins_uniform = true;
  for (int v = 0; v < a.graph.n; ++v) {
    bool win = sol.eve_wins[static_cast<size_t>(p.start[static_cast<size_t>(v)])];
    out.eve_region[static_cast<size_t>(v)] = win;
    out.eve_wins_uniform = out.eve_wins_uniform && win;
  }
  if (!out.eve_wins_uniform) return out;

  // Strategy graph: winning-region subgraph, Eve restricted to her choice.
  // Labels come from the base arena so the projection is a strategy morphism.
  Strategy st;
  st.graph.alphabet = a.graph.alphabet;
  st.graph.n = p.arena.graph.n;
  for (int x = 0; x < p.arena.graph.n; ++x) st.graph.names.push_back(p.arena.graph.names[static_cast<size_t>(x)]);
  for (size_t ei = 0; ei < p.arena.graph.edges.size(); ++ei) {
    const Edge& pe = p.arena.graph.edges[ei];
    if (!sol.eve_wins[static_cast<size_t>(pe.src)] || !sol.eve_wins[static_cast<size_t>(pe.dst)])
      continue;
    if (p.arena.eve[static_cast<size_t>(pe.src)] &&
        static_cast<int>(ei) != sol.eve_choice[static_cast<size_t>(pe.src)])
      continue;
    const Edge& base = a.graph.edges[static_cast<size_t>(p.edge_base[ei])];
    st.graph.edges.push_back(Edge{pe.src, base.letter, pe.dst});
  }
  st.graph.normalize();
  st.morphism.map = p.base_vertex;

  // Unreachable product vertices may linger; restrict to vertices reachable
  // from the start set to keep the strategy graph sinkless.
  std::vector<bool> seen(static_cast<size_t>(st.graph.n), false);
  std::vector<int> stack;
  for (int s : p.start)
    if (!seen[static_cast<size_t>(s)]) {
      seen[static_cast<size_t>(s)] = true;
      stack.push_back(s);
    }
  auto oidx = st.graph.out_index();
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int ei : oidx[static_cast<size_t>(x)]) {
      int y = st.graph.edges[static_cast<size_t>(ei)].dst;
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }
  std::vector<int> remap(static_cast<size_t>(st.graph.n), -1);
  Strategy trimmed;
  trimmed.graph.alphabet = st.graph.alphabet;
  for (int x = 0; x < st.graph.n; ++x) {
    if (!seen[static_cast<size_t>(x)]) continue;
    remap[static_cast<size_t>(x)] = trimmed.graph.n++;
    trimmed.graph.names.push_back(st.graph.names[static_cast<size_t>(x)]);
    trimmed.morphism.map.push_back(st.morphism.map[static_cast<size_t>(x)]);
  }
  for (const Edge& e : st.graph.edges)
    if (seen[static_cast<size_t>(e.src)])
      trimmed.graph.edges.push_back(
          Edge{remap[static_cast<size_t>(e.src)], e.letter, remap[static_cast<size_t>(e.dst)]});
  trimmed.graph.normalize();
  out.strategy = trimmed;
  return out;
}

}  // namespace detail

inline WinResult eve_wins(const Arena& a, const Objective& w) {
  require_valid(a, "eve_wins");
  for (const Edge& e : a.graph.edges)
    if (!w.alphabet.find(a.graph.alphabet.name(e.letter)))
      throw std::invalid_argument("eve_wins: arena letter outside objective alphabet");

  if (w.trivial_on_finite) {
    WinResult out;
    out.route = "trivial";
    out.eve_wins_uniform = true;
    out.eve_region.assign(static_cast<size_t>(a.graph.n), true);
    PositionalStrategy s;
    s.kept_edges = a.graph.edges;
    out.positional = s;
    return out;
  }

  if (w.family == "parity") {
    auto prio = [&](const Edge& e) { return static_cast<int>(a.graph.alphabet.value(e.letter)); };
    EdgeParitySolution sol = solve_edge_parity(a, prio);
    WinResult out;
    out.route = "parity";
    out.eve_region = sol.eve_wins;
    out.eve_wins_uniform =
        std::all_of(sol.eve_wins.begin(), sol.eve_wins.end(), [](bool b) { return b; });
    if (out.eve_wins_uniform) {
      PositionalStrategy s;
      for (size_t ei = 0; ei < a.graph.edges.size(); ++ei) {
        const Edge& e = a.graph.edges[ei];
        if (!a.eve[static_cast<size_t>(e.src)] ||
            static_cast<int>(ei) == sol.eve_choice[static_cast<size_t>(e.src)])
          s.kept_edges.push_back(e);
      }
      out.positional = s;
      out.strategy = as_strategy(a, s);
    }
    return out;
  }

  if (w.cycle_method == CycleMethod::ScaledNonPositive) {
    long long mul = w.scale_by_size ? static_cast<long long>(a.graph.n) : w.scale_mul;
    long long add = w.scale_add;
    auto weight = [&, mul, add](const Edge& e) { return mul * a.graph.alphabet.value(e.letter) + add; };
    EnergySolution sol = solve_energy_game(a, weight);
    WinResult out;
    out.route = w.scale_by_size ? "tilted-energy" : "energy";
    out.eve_region = sol.eve_region;
    out.eve_wins_uniform =
        std::all_of(sol.eve_region.begin(), sol.eve_region.end(), [](bool b) { return b; });
    if (out.eve_wins_uniform) {
      PositionalStrategy s;
      for (size_t ei = 0; ei < a.graph.edges.size(); ++ei) {
        const Edge& e = a.graph.edges[ei];
        if (!a.eve[static_cast<size_t>(e.src)] ||
            static_cast<int>(ei) == sol.eve_choice[static_cast<size_t>(e.src)])
          s.kept_edges.push_back(e);
      }
      out.positional = s;
      out.strategy = as_strategy(a, s);
    }
    return out;
  }

  if (w.recognizer) {
    PriorityTracker t = tracker_from_recognizer(*w.recognizer, a.graph.alphabet);
    return detail::win_via_tracker(a, t, "recognizer-product");
  }

  if (w.cycle_method == CycleMethod::RequiredLetters) {
    PriorityTracker t = tracker_generalized_buchi(w);
    return detail::win_via_tracker(a, t, "buchi-product");
  }

  throw std::invalid_argument("eve_wins: objective not solvable: " + w.key);
}

// Rooted variant: winner from a designated vertex, computed on the reachable
// sub-arena.
inline bool eve_wins_from(const Arena& a, const Objective& w, int root) {
  std::vector<bool> keep = reachable_from(a.graph, root);
  std::vector<int> remap(static_cast<size_t>(a.graph.n), -1);
  Arena sub;
  sub.graph.alphabet = a.graph.alphabet;
  for (int v = 0; v < a.graph.n; ++v) {
    if (!keep[static_cast<size_t>(v)]) continue;
    remap[static_cast<size_t>(v)] = sub.graph.n++;
    sub.eve.push_back(a.eve[static_cast<size_t>(v)]);
    sub.graph.names.push_back(a.graph.display_name(v));
  }
  for (const Edge& e : a.graph.edges)
    if (keep[static_cast<size_t>(e.src)])
      sub.graph.edges.push_back(Edge{remap[static_cast<size_t>(e.src)], e.letter, remap[static_cast<size_t>(e.dst)]});
  sub.graph.normalize();
  WinResult r = eve_wins(sub, w);
  return r.eve_region[static_cast<size_t>(remap[static_cast<size_t>(root)])];
}

// ---------------------------------------------------------------------------
// Exhaustive positional search: one kept edge per Eve vertex, all Adam edges;
// returns the lexicographically least selection whose kept graph satisfies
// the objective from every vertex.
// ---------------------------------------------------------------------------
inline std::optional<PositionalStrategy> exists_positional_winning(const Arena& a, const Objective& w,
                                                                   long long budget = 4'000'000) {
  require_valid(a, "exists_positional_winning");
  auto oidx = a.graph.out_index();
  std::vector<int> eve_vertices;
  long long combos = 1;
  for (int v = 0; v < a.graph.n; ++v)
    if (a.eve[static_cast<size_t>(v)]) {
      eve_vertices.push_back(v);
      combos *= static_cast<long long>(oidx[static_cast<size_t>(v)].size());
      if (combos > budget) throw BudgetExceeded();
    }

  std::vector<int> choice(eve_vertices.size(), 0);
  for (;;) {
    PositionalStrategy s;
    for (const Edge& e : a.graph.edges)
      if (!a.eve[static_cast<size_t>(e.src)]) s.kept_edges.push_back(e);
    for (size_t i = 0; i < eve_vertices.size(); ++i) {
      int v = eve_vertices[i];
      s.kept_edges.push_back(
          a.graph.edges[static_cast<size_t>(oidx[static_cast<size_t>(v)][static_cast<size_t>(choice[i])])]);
    }
    std::sort(s.kept_edges.begin(), s.kept_edges.end());
    if (graph_satisfies(w, kept_graph(a, s)).ok) return s;

    // advance odometer
    size_t i = 0;
    while (i < choice.size()) {
      if (++choice[i] < static_cast<int>(oidx[static_cast<size_t>(eve_vertices[i])].size())) break;
      choice[i] = 0;
      ++i;
    }
    if (i == choice.size()) return std::nullopt;
  }
}

}  // namespace poslab
