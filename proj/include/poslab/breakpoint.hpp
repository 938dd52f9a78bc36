#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "poslab/automaton.hpp"

namespace poslab {

// Breakpoint (Miyano-Hayashi style) determinization for co-Büchi automata.
// States are pairs (reachable set S, obligation set O): O tracks the runs
// that have stayed normal since the last breakpoint. When O empties, the
// transition is CoBuchi and O resets to S. Language is preserved.
inline CoBuchiAutomaton determinize_breakpoint(const CoBuchiAutomaton& a,
                                               int state_budget = 200000) {
  require_valid(a, "determinize_breakpoint");
  using Set = std::vector<bool>;
  struct Pair {
    Set s, o;
    bool operator<(const Pair& other) const {
      if (s != other.s) return s < other.s;
      return o < other.o;
    }
  };

  std::vector<std::vector<const Transition*>> by_src_letter(
      static_cast<size_t>(a.n) * static_cast<size_t>(a.alphabet.size()));
  for (const Transition& t : a.trans)
    by_src_letter[static_cast<size_t>(t.src) * a.alphabet.size() + static_cast<size_t>(t.letter)]
        .push_back(&t);

  auto successors = [&](const Set& s, Letter c, bool normal_only) {
    Set nxt(static_cast<size_t>(a.n), false);
    for (int q = 0; q < a.n; ++q) {
      if (!s[static_cast<size_t>(q)]) continue;
      for (const Transition* t :
           by_src_letter[static_cast<size_t>(q) * a.alphabet.size() + static_cast<size_t>(c)]) {
        if (normal_only && t->kind != Kind::Normal) continue;
        nxt[static_cast<size_t>(t->dst)] = true;
      }
    }
    return nxt;
  };
  auto empty = [](const Set& s) {
    for (bool b : s)
      if (b) return false;
    return true;
  };

  CoBuchiAutomaton d;
  d.alphabet = a.alphabet;
  std::map<Pair, int> id;
  std::vector<Pair> pool;
  auto intern = [&](const Pair& p) {
    auto [it, fresh] = id.try_emplace(p, static_cast<int>(pool.size()));
    if (fresh) {
      pool.push_back(p);
      if (static_cast<int>(pool.size()) > state_budget)
        throw std::runtime_error("determinize_breakpoint: state budget exceeded");
    }
    return it->second;
  };

  Set init(static_cast<size_t>(a.n), false);
  init[static_cast<size_t>(a.initial)] = true;
  d.initial = intern(Pair{init, init});

  for (size_t i = 0; i < pool.size(); ++i) {
    Pair cur = pool[i];
    for (Letter c = 0; c < a.alphabet.size(); ++c) {
      Set s2 = successors(cur.s, c, false);
      if (empty(s2)) throw std::runtime_error("determinize_breakpoint: source not complete");
      Set o2 = successors(cur.o, c, true);
      Kind k = Kind::Normal;
      if (empty(o2)) {
        k = Kind::CoBuchi;
        o2 = s2;
      }
      int dst = intern(Pair{s2, o2});
      d.trans.push_back(Transition{static_cast<int>(i), c, k, dst});
    }
  }
  d.n = static_cast<int>(pool.size());
  d.normalize();
  return d;
}

}  // namespace poslab
