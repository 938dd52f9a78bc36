#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poslab/automaton.hpp"
#include "poslab/language.hpp"
#include "poslab/resolver.hpp"

namespace poslab {

// ---------------------------------------------------------------------------
// Energy automaton: states 0..cap ordered by value, initial 0, all CoBuchi
// transitions, and a normal transition v -w-> v' exactly when w <= v - v'.
// Any normal path from v0 keeps all prefix sums below v0.
// ---------------------------------------------------------------------------
inline CoBuchiAutomaton energy_automaton(int cap, int weight_bound) {
  if (cap < 1) throw std::invalid_argument("energy_automaton: cap must be >= 1");
  CoBuchiAutomaton a;
  a.alphabet = Alphabet::weights(-weight_bound, weight_bound);
  a.n = cap + 1;
  a.initial = 0;
  a.rank.resize(static_cast<size_t>(a.n));
  std::iota(a.rank.begin(), a.rank.end(), 0);
  for (int v = 0; v <= cap; ++v)
    for (Letter c = 0; c < a.alphabet.size(); ++c) {
      long long w = a.alphabet.value(c);
      for (int v2 = 0; v2 <= cap; ++v2)
        if (w <= static_cast<long long>(v) - v2) a.trans.push_back(Transition{v, c, Kind::Normal, v2});
    }
  a = saturate(std::move(a));
  return a;
}

// Counter resolver for the energy automaton. From (v, c) reading w: if
// v - w stays in range take the normal transition to (v - w, c); on
// underflow take a CoBuchi jump to (c + 1, c + 1). On words whose prefix
// sums never exceed N the counter never exceeds N.
inline Resolver energy_resolver(int cap, int counter_cap, int weight_bound) {
  if (counter_cap > cap)
    throw std::invalid_argument("energy_resolver: counter_cap must be <= cap");
  CoBuchiAutomaton target = energy_automaton(cap, weight_bound);
  Resolver r;
  r.automaton.alphabet = target.alphabet;
  int cc = counter_cap + 1;
  r.automaton.n = (cap + 1) * cc;
  auto sid = [&](int v, int c) { return v * cc + c; };
  r.automaton.initial = sid(0, 0);
  for (int v = 0; v <= cap; ++v)
    for (int c = 0; c <= counter_cap; ++c) {
      r.morphism.push_back(0);  // filled below
      for (Letter lw = 0; lw < target.alphabet.size(); ++lw) {
        long long w = target.alphabet.value(lw);
        long long v2 = static_cast<long long>(v) - w;
        if (v2 >= 0) {
          // Clamped at the cap; the replay helper flags when that happens.
          int tgt = static_cast<int>(std::min<long long>(v2, cap));
          r.automaton.trans.push_back(Transition{sid(v, c), lw, Kind::Normal, sid(tgt, c)});
        } else {
          int c2 = std::min(c + 1, counter_cap);
          r.automaton.trans.push_back(Transition{sid(v, c), lw, Kind::CoBuchi, sid(c2, c2)});
        }
      }
    }
  r.morphism.resize(static_cast<size_t>(r.automaton.n));
  for (int v = 0; v <= cap; ++v)
    for (int c = 0; c <= counter_cap; ++c) r.morphism[static_cast<size_t>(sid(v, c))] = v;
  r.automaton.normalize();
  require_resolver(r, target, "energy_resolver");
  return r;
}

// Direct replay of the counter rules on a raw weight word; reports the
// maximal counter value and whether any cap was hit (a truncation artifact,
// distinct from unsoundness).
struct EnergyReplay {
  int max_counter = 0;
  int cobuchi_steps = 0;
  bool counter_overflow = false;
  bool state_clamped = false;
};

inline EnergyReplay replay_energy_rules(int cap, int counter_cap, const std::vector<long long>& word) {
  EnergyReplay rep;
  long long v = 0, c = 0;
  for (long long w : word) {
    long long v2 = v - w;
    if (v2 >= 0) {
      if (v2 > cap) {
        rep.state_clamped = true;
        v2 = cap;
      }
      v = v2;
    } else {
      ++rep.cobuchi_steps;
      long long c2 = c + 1;
      if (c2 > counter_cap) {
        rep.counter_overflow = true;
        c2 = counter_cap;
      }
      c = c2;
      v = c;
      if (c > rep.max_counter) rep.max_counter = static_cast<int>(c);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Eventually non-increasing letters: states 0..m, normal v -w-> v' exactly
// when v >= w >= v'. A normal path forces v0 >= w0 >= v1 >= w1 >= ...
// ---------------------------------------------------------------------------
inline CoBuchiAutomaton eni_automaton(int m) {
  if (m < 1) throw std::invalid_argument("eni_automaton: m must be >= 1");
  CoBuchiAutomaton a;
  a.alphabet = Alphabet::weights(0, m);
  a.n = m + 1;
  a.initial = 0;
  a.rank.resize(static_cast<size_t>(a.n));
  std::iota(a.rank.begin(), a.rank.end(), 0);
  for (int v = 0; v <= m; ++v)
    for (Letter c = 0; c < a.alphabet.size(); ++c) {
      long long w = a.alphabet.value(c);
      for (int v2 = 0; v2 <= m; ++v2)
        if (v >= w && w >= v2) a.trans.push_back(Transition{v, c, Kind::Normal, v2});
    }
  a = saturate(std::move(a));
  return a;
}

// Finite-support shape: states 0..m, normal v -w-> v' exactly when both
// w <= v and v' <= v. Over a truncated alphabet the language is everything;
// the automaton exists to exercise the construction.
inline CoBuchiAutomaton finite_support_automaton(int m) {
  if (m < 1) throw std::invalid_argument("finite_support_automaton: m must be >= 1");
  CoBuchiAutomaton a;
  a.alphabet = Alphabet::weights(0, m);
  a.n = m + 1;
  a.initial = 0;
  a.rank.resize(static_cast<size_t>(a.n));
  std::iota(a.rank.begin(), a.rank.end(), 0);
  for (int v = 0; v <= m; ++v)
    for (Letter c = 0; c < a.alphabet.size(); ++c) {
      long long w = a.alphabet.value(c);
      for (int v2 = 0; v2 <= m; ++v2)
        if (w <= v && v2 <= v) a.trans.push_back(Transition{v, c, Kind::Normal, v2});
    }
  a = saturate(std::move(a));
  return a;
}

// ---------------------------------------------------------------------------
// Infix-pattern machinery. A pattern is a hand-coded NFA; the objective is
// "finitely many infixes matching the pattern". State 0 is the scanning
// state and must carry self-loops on every letter so occurrences can start
// anywhere.
// ---------------------------------------------------------------------------
struct PatternNfa {
  Alphabet alphabet;
  int n = 0;
  std::vector<Edge> trans;           // (state, letter, state)
  std::vector<bool> accepting;       // completion states
};

// "aab" infixes; with erase != -1 the letter `erase` is transparent, so the
// pattern is a e* a e* b (occurrences in the erased word).
inline PatternNfa aab_pattern(bool with_neutral) {
  PatternNfa p;
  p.alphabet = with_neutral ? Alphabet::symbols({"a", "b", "e"}) : Alphabet::symbols({"a", "b"});
  p.n = 4;
  p.accepting = {false, false, false, true};
  Letter a = p.alphabet.require("a"), b = p.alphabet.require("b");
  for (Letter c = 0; c < p.alphabet.size(); ++c) p.trans.push_back(Edge{0, c, 0});
  p.trans.push_back(Edge{0, a, 1});
  p.trans.push_back(Edge{1, a, 2});
  p.trans.push_back(Edge{2, b, 3});
  if (with_neutral) {
    Letter e = p.alphabet.require("e");
    p.trans.push_back(Edge{1, e, 1});
    p.trans.push_back(Edge{2, e, 2});
  }
  return p;
}

// Infixes in c (a* c b*)+ c over {a, b, c}.
inline PatternNfa block_pattern() {
  PatternNfa p;
  p.alphabet = Alphabet::symbols({"a", "b", "c"});
  p.n = 4;  // 0 scan, 1 = inside a*, 2 = after the block's c (inside b*), 3 done
  p.accepting = {false, false, false, true};
  Letter a = p.alphabet.require("a"), b = p.alphabet.require("b"), c = p.alphabet.require("c");
  for (Letter l = 0; l < p.alphabet.size(); ++l) p.trans.push_back(Edge{0, l, 0});
  p.trans.push_back(Edge{0, c, 1});  // opening c
  p.trans.push_back(Edge{1, a, 1});
  p.trans.push_back(Edge{1, c, 2});  // the block's mandatory c
  p.trans.push_back(Edge{2, b, 2});
  p.trans.push_back(Edge{2, a, 1});  // next block starting with a's
  p.trans.push_back(Edge{2, c, 2});  // next block with zero a's
  p.trans.push_back(Edge{2, c, 3});  // closing c
  return p;
}

namespace detail {

using StateSet = std::vector<bool>;

inline StateSet nfa_image(const PatternNfa& p, const StateSet& s, Letter c) {
  StateSet out(static_cast<size_t>(p.n), false);
  for (const Edge& e : p.trans)
    if (e.letter == c && s[static_cast<size_t>(e.src)]) out[static_cast<size_t>(e.dst)] = true;
  return out;
}

inline bool hits_accepting(const PatternNfa& p, const StateSet& s) {
  for (int q = 0; q < p.n; ++q)
    if (s[static_cast<size_t>(q)] && p.accepting[static_cast<size_t>(q)]) return true;
  return false;
}

inline StateSet strip_accepting(const PatternNfa& p, StateSet s) {
  for (int q = 0; q < p.n; ++q)
    if (p.accepting[static_cast<size_t>(q)]) s[static_cast<size_t>(q)] = false;
  return s;
}

}  // namespace detail

// Deterministic complete recognizer for "finitely many infixes matching the
// pattern": the subset automaton of scanning threads, with a CoBuchi
// transition exactly when a thread completes the pattern.
inline CoBuchiAutomaton pattern_recognizer(const PatternNfa& p) {
  using detail::StateSet;
  CoBuchiAutomaton d;
  d.alphabet = p.alphabet;
  std::map<StateSet, int> id;
  std::vector<StateSet> pool;
  auto intern = [&](const StateSet& s) {
    auto [it, fresh] = id.try_emplace(s, static_cast<int>(pool.size()));
    if (fresh) pool.push_back(s);
    return it->second;
  };
  StateSet init(static_cast<size_t>(p.n), false);
  init[0] = true;
  d.initial = intern(init);
  for (size_t i = 0; i < pool.size(); ++i) {
    StateSet cur = pool[i];
    for (Letter c = 0; c < p.alphabet.size(); ++c) {
      StateSet img = detail::nfa_image(p, cur, c);
      Kind k = detail::hits_accepting(p, img) ? Kind::CoBuchi : Kind::Normal;
      int dst = intern(detail::strip_accepting(p, img));
      d.trans.push_back(Transition{static_cast<int>(i), c, k, dst});
    }
  }
  d.n = static_cast<int>(pool.size());
  d.normalize();
  return d;
}

// Restriction of the subset automaton to pattern-free behaviour: states are
// the reachable completion-free subsets, edges those that complete nothing.
// Labels of infinite paths in this graph contain no pattern occurrence, and
// every tail with no occurrence labels a path from the scan state.
inline Graph pattern_safety_graph(const PatternNfa& p) {
  using detail::StateSet;
  Graph g;
  g.alphabet = p.alphabet;
  std::map<StateSet, int> id;
  std::vector<StateSet> pool;
  auto intern = [&](const StateSet& s) {
    auto [it, fresh] = id.try_emplace(s, static_cast<int>(pool.size()));
    if (fresh) pool.push_back(s);
    return it->second;
  };
  StateSet init(static_cast<size_t>(p.n), false);
  init[0] = true;
  intern(init);
  for (size_t i = 0; i < pool.size(); ++i) {
    StateSet cur = pool[i];
    for (Letter c = 0; c < p.alphabet.size(); ++c) {
      StateSet img = detail::nfa_image(p, cur, c);
      if (detail::hits_accepting(p, img)) continue;
      int dst = intern(img);
      g.edges.push_back(Edge{static_cast<int>(i), c, dst});
    }
  }
  g.n = static_cast<int>(pool.size());
  g.normalize();
  return g;
}

// Builds an ordered saturated monotone automaton for the pattern objective:
// the safety graph becomes the normal part, an order is searched for by
// exhaustive permutation, every candidate closure is validated exactly
// against the recognizer. Returns nullopt when no order works.
inline std::optional<CoBuchiAutomaton> pattern_monotone_automaton(const PatternNfa& p) {
  Graph safety = pattern_safety_graph(p);
  CoBuchiAutomaton recognizer = pattern_recognizer(p);
  if (safety.n > 7) return std::nullopt;  // 7! permutations is the intended scale

  std::vector<int> perm(static_cast<size_t>(safety.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    OrderedGraph og{safety, perm};
    OrderedGraph closed = monotone_closure(og);
    // The closure must not create a stuck vertex pattern; it cannot, edges only grow.
    CoBuchiAutomaton a;
    a.alphabet = safety.alphabet;
    a.n = safety.n;
    a.rank = perm;
    for (const Edge& e : closed.graph.edges)
      a.trans.push_back(Transition{e.src, e.letter, Kind::Normal, e.dst});
    a = saturate(std::move(a));
    // Initial state: the least-rank state, so unions can root at part 0's
    // initial; the language of a saturated automaton with a prefix-independent
    // language does not depend on the root.
    for (int q = 0; q < a.n; ++q)
      if (a.rank[static_cast<size_t>(q)] == 0) a.initial = q;
    if (language_contained(a, recognizer)) {
      // Containment the other way holds by construction: the un-closed
      // automaton already accepts the whole objective.
      return a;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// Single-state automaton for "finitely many occurrences of the given letter":
// a normal self-loop on every other letter, saturated.
inline CoBuchiAutomaton finitely_many_letter_automaton(const Alphabet& alphabet,
                                                       const std::string& bad) {
  CoBuchiAutomaton a;
  a.alphabet = alphabet;
  a.n = 1;
  a.initial = 0;
  a.rank = {0};
  Letter badc = alphabet.require(bad);
  for (Letter c = 0; c < alphabet.size(); ++c)
    if (c != badc) a.trans.push_back(Transition{0, c, Kind::Normal, 0});
  a = saturate(std::move(a));
  return a;
}

// A three-state automaton that must guess, on the first letter, whether the
// future holds finitely many b's or finitely many a's; no resolver can make
// the guess soundly, so it is not history-deterministic.
inline CoBuchiAutomaton guesser_automaton() {
  CoBuchiAutomaton a;
  a.alphabet = Alphabet::symbols({"a", "b"});
  a.n = 3;  // 0 = start, 1 = bets on finitely many b, 2 = bets on finitely many a
  a.initial = 0;
  Letter la = 0, lb = 1;
  a.trans = {
      Transition{0, la, Kind::Normal, 1}, Transition{0, la, Kind::Normal, 2},
      Transition{0, lb, Kind::Normal, 1}, Transition{0, lb, Kind::Normal, 2},
      Transition{1, la, Kind::Normal, 1}, Transition{1, lb, Kind::CoBuchi, 1},
      Transition{2, lb, Kind::Normal, 2}, Transition{2, la, Kind::CoBuchi, 2},
  };
  a.normalize();
  return a;
}

}  // namespace poslab
