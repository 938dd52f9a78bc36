#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poslab/alphabet.hpp"
#include "poslab/graph.hpp"
#include "poslab/scc.hpp"

namespace poslab {

enum class Kind : int { Normal = 0, CoBuchi = 1 };

struct Transition {
  int src = 0;
  Letter letter = 0;
  Kind kind = Kind::Normal;
  int dst = 0;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

// Co-Büchi automaton: a rooted graph over letter x {Normal, CoBuchi}. A run
// accepts when it takes finitely many CoBuchi transitions. Automata are kept
// complete (every (state, letter) has a successor) and reachable.
struct CoBuchiAutomaton {
  Alphabet alphabet;
  int n = 0;
  int initial = 0;
  std::vector<Transition> trans;         // sorted, unique
  std::vector<int> rank;                 // optional total order; empty if none
  std::vector<std::string> names;

  bool ordered() const { return !rank.empty(); }

  std::string display_name(int q) const {
    if (q >= 0 && static_cast<size_t>(q) < names.size() && !names[static_cast<size_t>(q)].empty())
      return names[static_cast<size_t>(q)];
    return "q" + std::to_string(q);
  }

  void normalize() {
    std::sort(trans.begin(), trans.end());
    trans.erase(std::unique(trans.begin(), trans.end()), trans.end());
  }

  bool has_transition(int src, Letter c, Kind k, int dst) const {
    Transition t{src, c, k, dst};
    return std::binary_search(trans.begin(), trans.end(), t);
  }

  std::vector<std::vector<int>> out_index() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(n));
    for (size_t i = 0; i < trans.size(); ++i)
      out[static_cast<size_t>(trans[i].src)].push_back(static_cast<int>(i));
    return out;
  }

  // View as a plain graph over the paired alphabet letter x kind
  // (letter c keeps its name, (c, CoBuchi) becomes "c/F"). This is the graph
  // monotonicity and morphisms of automata are defined on.
  Graph kind_graph() const {
    std::vector<std::string> syms;
    for (int c = 0; c < alphabet.size(); ++c) syms.push_back(alphabet.name(c));
    for (int c = 0; c < alphabet.size(); ++c) syms.push_back(alphabet.name(c) + "/F");
    Graph g;
    g.alphabet = Alphabet::symbols(syms);
    g.n = n;
    g.names = names;
    for (const Transition& t : trans) {
      int ltr = t.letter + (t.kind == Kind::CoBuchi ? alphabet.size() : 0);
      g.edges.push_back(Edge{t.src, ltr, t.dst});
    }
    g.normalize();
    return g;
  }

  // The graph of normal transitions only. May have sinks.
  Graph normal_graph() const {
    Graph g;
    g.alphabet = alphabet;
    g.n = n;
    g.names = names;
    for (const Transition& t : trans)
      if (t.kind == Kind::Normal) g.edges.push_back(Edge{t.src, t.letter, t.dst});
    g.normalize();
    return g;
  }

  friend bool operator==(const CoBuchiAutomaton& a, const CoBuchiAutomaton& b) {
    return a.alphabet == b.alphabet && a.n == b.n && a.initial == b.initial && a.trans == b.trans;
  }
};

struct AutomatonReport {
  std::vector<std::pair<int, Letter>> incomplete;  // (state, letter) with no transition
  std::vector<int> unreachable;
  bool ok() const { return incomplete.empty() && unreachable.empty(); }
};

inline AutomatonReport validate_automaton(const CoBuchiAutomaton& a) {
  AutomatonReport r;
  std::vector<std::vector<bool>> has(static_cast<size_t>(a.n),
                                     std::vector<bool>(static_cast<size_t>(a.alphabet.size()), false));
  std::vector<std::vector<int>> adj(static_cast<size_t>(a.n));
  for (const Transition& t : a.trans) {
    has[static_cast<size_t>(t.src)][static_cast<size_t>(t.letter)] = true;
    adj[static_cast<size_t>(t.src)].push_back(t.dst);
  }
  for (int q = 0; q < a.n; ++q)
    for (Letter c = 0; c < a.alphabet.size(); ++c)
      if (!has[static_cast<size_t>(q)][static_cast<size_t>(c)]) r.incomplete.push_back({q, c});
  std::vector<bool> seen(static_cast<size_t>(a.n), false);
  std::vector<int> stack{a.initial};
  seen[static_cast<size_t>(a.initial)] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
  }
  for (int q = 0; q < a.n; ++q)
    if (!seen[static_cast<size_t>(q)]) r.unreachable.push_back(q);
  return r;
}

inline void require_valid(const CoBuchiAutomaton& a, const char* ctx) {
  auto r = validate_automaton(a);
  if (!r.ok()) throw std::invalid_argument(std::string(ctx) + ": invalid automaton");
}

inline bool is_deterministic(const CoBuchiAutomaton& a) {
  std::vector<std::vector<int>> cnt(static_cast<size_t>(a.n),
                                    std::vector<int>(static_cast<size_t>(a.alphabet.size()), 0));
  for (const Transition& t : a.trans)
    if (++cnt[static_cast<size_t>(t.src)][static_cast<size_t>(t.letter)] > 1) return false;
  for (int q = 0; q < a.n; ++q)
    for (Letter c = 0; c < a.alphabet.size(); ++c)
      if (cnt[static_cast<size_t>(q)][static_cast<size_t>(c)] != 1) return false;
  return true;
}

inline bool is_saturated(const CoBuchiAutomaton& a) {
  for (int q = 0; q < a.n; ++q)
    for (Letter c = 0; c < a.alphabet.size(); ++c)
      for (int q2 = 0; q2 < a.n; ++q2)
        if (!a.has_transition(q, c, Kind::CoBuchi, q2)) return false;
  return true;
}

// Adds every possible CoBuchi transition; states, initial state and order are
// untouched.
inline CoBuchiAutomaton saturate(CoBuchiAutomaton a) {
  for (int q = 0; q < a.n; ++q)
    for (Letter c = 0; c < a.alphabet.size(); ++c)
      for (int q2 = 0; q2 < a.n; ++q2)
        a.trans.push_back(Transition{q, c, Kind::CoBuchi, q2});
  a.normalize();
  return a;
}

// Restriction to the states reachable from the initial state, reindexed.
inline CoBuchiAutomaton trim_reachable(const CoBuchiAutomaton& a) {
  std::vector<bool> seen(static_cast<size_t>(a.n), false);
  std::vector<int> stack{a.initial};
  seen[static_cast<size_t>(a.initial)] = true;
  auto oidx = a.out_index();
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int ti : oidx[static_cast<size_t>(q)]) {
      int w = a.trans[static_cast<size_t>(ti)].dst;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> remap(static_cast<size_t>(a.n), -1);
  CoBuchiAutomaton out;
  out.alphabet = a.alphabet;
  for (int q = 0; q < a.n; ++q) {
    if (!seen[static_cast<size_t>(q)]) continue;
    remap[static_cast<size_t>(q)] = out.n++;
    if (!a.names.empty()) out.names.push_back(a.names[static_cast<size_t>(q)]);
  }
  out.initial = remap[static_cast<size_t>(a.initial)];
  for (const Transition& t : a.trans)
    if (seen[static_cast<size_t>(t.src)])
      out.trans.push_back(Transition{remap[static_cast<size_t>(t.src)], t.letter, t.kind,
                                     remap[static_cast<size_t>(t.dst)]});
  if (a.ordered()) {
    std::vector<std::pair<int, int>> order;
    for (int q = 0; q < a.n; ++q)
      if (seen[static_cast<size_t>(q)])
        order.push_back({a.rank[static_cast<size_t>(q)], remap[static_cast<size_t>(q)]});
    std::sort(order.begin(), order.end());
    out.rank.resize(static_cast<size_t>(out.n));
    for (size_t i = 0; i < order.size(); ++i)
      out.rank[static_cast<size_t>(order[i].second)] = static_cast<int>(i);
  }
  out.normalize();
  return out;
}

inline std::optional<Edge> check_monotone_automaton(const CoBuchiAutomaton& a) {
  if (!a.ordered()) throw std::invalid_argument("check_monotone_automaton: no order");
  return check_monotone(OrderedGraph{a.kind_graph(), a.rank});
}

// Ultimately periodic word over the letters of some alphabet: prefix u then
// period v repeated forever. v must be nonempty.
struct UPWord {
  std::vector<Letter> u;
  std::vector<Letter> v;
};

// Decides whether the automaton accepts u v^omega. Exact: the word is
// accepted iff the product of the automaton with the lasso shape of the word
// has a cycle of normal transitions (over period positions) reachable from an
// initial product state via arbitrary transitions.
inline bool accepts_up(const CoBuchiAutomaton& a, const UPWord& w) {
  if (w.v.empty()) throw std::invalid_argument("accepts_up: empty period");
  int p = static_cast<int>(w.v.size());

  // States reachable after reading the stem (any transition kinds).
  std::vector<bool> cur(static_cast<size_t>(a.n), false);
  cur[static_cast<size_t>(a.initial)] = true;
  auto step_set = [&](const std::vector<bool>& s, Letter c) {
    std::vector<bool> nxt(static_cast<size_t>(a.n), false);
    for (const Transition& t : a.trans)
      if (t.letter == c && s[static_cast<size_t>(t.src)]) nxt[static_cast<size_t>(t.dst)] = true;
    return nxt;
  };
  for (Letter c : w.u) cur = step_set(cur, c);

  // Product vertices: (state, period position). Reachability with any kinds.
  auto pid = [&](int q, int pos) { return q * p + pos; };
  int pn = a.n * p;
  std::vector<bool> reach(static_cast<size_t>(pn), false);
  std::vector<int> stack;
  for (int q = 0; q < a.n; ++q)
    if (cur[static_cast<size_t>(q)]) {
      reach[static_cast<size_t>(pid(q, 0))] = true;
      stack.push_back(pid(q, 0));
    }
  std::vector<std::vector<int>> by_letter(static_cast<size_t>(a.alphabet.size()));
  for (size_t i = 0; i < a.trans.size(); ++i)
    by_letter[static_cast<size_t>(a.trans[i].letter)].push_back(static_cast<int>(i));
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    int q = x / p, pos = x % p;
    Letter c = w.v[static_cast<size_t>(pos)];
    for (int ti : by_letter[static_cast<size_t>(c)]) {
      const Transition& t = a.trans[static_cast<size_t>(ti)];
      if (t.src != q) continue;
      int y = pid(t.dst, (pos + 1) % p);
      if (!reach[static_cast<size_t>(y)]) {
        reach[static_cast<size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }

  // Normal-only product subgraph restricted to reachable vertices; accepted
  // iff it has a cycle, i.e. an SCC with an internal edge.
  std::vector<std::vector<int>> adj(static_cast<size_t>(pn));
  for (const Transition& t : a.trans) {
    if (t.kind != Kind::Normal) continue;
    for (int pos = 0; pos < p; ++pos) {
      if (w.v[static_cast<size_t>(pos)] != t.letter) continue;
      int x = pid(t.src, pos), y = pid(t.dst, (pos + 1) % p);
      if (reach[static_cast<size_t>(x)]) adj[static_cast<size_t>(x)].push_back(y);
    }
  }
  SccResult scc = strongly_connected_components(adj);
  for (int x = 0; x < pn; ++x) {
    if (!reach[static_cast<size_t>(x)]) continue;
    for (int y : adj[static_cast<size_t>(x)])
      if (scc.comp[static_cast<size_t>(x)] == scc.comp[static_cast<size_t>(y)]) return true;
  }
  return false;
}

// Deterministic run on u v^omega: run the stem, then pump the period until a
// (state, period position) pair repeats; accepted iff the detected loop is
// free of CoBuchi transitions. Requires a deterministic automaton.
struct DetRun {
  bool accepted = false;
  int loop_cobuchi_count = 0;     // CoBuchi transitions on the detected loop
  int prefix_cobuchi_count = 0;   // CoBuchi transitions before the loop
};

inline DetRun run_deterministic_up(const CoBuchiAutomaton& a, const UPWord& w) {
  if (w.v.empty()) throw std::invalid_argument("run_deterministic_up: empty period");
  auto oidx = a.out_index();
  auto step = [&](int q, Letter c) -> const Transition& {
    const Transition* found = nullptr;
    for (int ti : oidx[static_cast<size_t>(q)]) {
      const Transition& t = a.trans[static_cast<size_t>(ti)];
      if (t.letter == c) {
        if (found) throw std::invalid_argument("run_deterministic_up: nondeterministic");
        found = &t;
      }
    }
    if (!found) throw std::invalid_argument("run_deterministic_up: incomplete");
    return *found;
  };

  int q = a.initial;
  DetRun r;
  for (Letter c : w.u) {
    const Transition& t = step(q, c);
    if (t.kind == Kind::CoBuchi) ++r.prefix_cobuchi_count;
    q = t.dst;
  }
  int p = static_cast<int>(w.v.size());
  std::vector<int> seen(static_cast<size_t>(a.n) * static_cast<size_t>(p), -1);
  std::vector<int> cob_prefix{0};  // cumulative CoBuchi count at each pumped step
  std::vector<int> states{q};
  int pos = 0, steps = 0;
  for (;;) {
    int key = q * p + pos;
    if (seen[static_cast<size_t>(key)] >= 0) {
      int start = seen[static_cast<size_t>(key)];
      r.loop_cobuchi_count = cob_prefix[static_cast<size_t>(steps)] - cob_prefix[static_cast<size_t>(start)];
      r.prefix_cobuchi_count += cob_prefix[static_cast<size_t>(start)];
      r.accepted = (r.loop_cobuchi_count == 0);
      return r;
    }
    seen[static_cast<size_t>(key)] = steps;
    const Transition& t = step(q, w.v[static_cast<size_t>(pos)]);
    cob_prefix.push_back(cob_prefix.back() + (t.kind == Kind::CoBuchi ? 1 : 0));
    q = t.dst;
    pos = (pos + 1) % p;
    ++steps;
    states.push_back(q);
  }
}

}  // namespace poslab
