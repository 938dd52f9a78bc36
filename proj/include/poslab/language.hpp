#pragma once

#include <stdexcept>
#include <vector>

#include "poslab/automaton.hpp"
#include "poslab/breakpoint.hpp"
#include "poslab/scc.hpp"

namespace poslab {

// Exact check of L(a) <= L(d) for a nondeterministic co-Büchi automaton `a`
// and a deterministic complete co-Büchi automaton `d`. A violating word
// exists iff the product has a reachable cycle using only a-normal
// transitions that contains a d-CoBuchi transition: pump that cycle and the
// a-run is eventually normal while the d-run sees CoBuchi forever.
inline bool language_contained(const CoBuchiAutomaton& a, const CoBuchiAutomaton& d) {
  require_valid(a, "language_contained(a)");
  require_valid(d, "language_contained(d)");
  if (!is_deterministic(d)) throw std::invalid_argument("language_contained: d not deterministic");

  // d step function, letters matched by symbol.
  std::vector<int> letter_map(static_cast<size_t>(a.alphabet.size()), -1);
  for (Letter c = 0; c < a.alphabet.size(); ++c) {
    auto t = d.alphabet.find(a.alphabet.name(c));
    if (!t) throw std::invalid_argument("language_contained: alphabet mismatch");
    letter_map[static_cast<size_t>(c)] = *t;
  }
  std::vector<const Transition*> dstep(static_cast<size_t>(d.n) * static_cast<size_t>(d.alphabet.size()),
                                       nullptr);
  for (const Transition& t : d.trans)
    dstep[static_cast<size_t>(t.src) * d.alphabet.size() + static_cast<size_t>(t.letter)] = &t;

  auto pid = [&](int q, int s) { return q * d.n + s; };
  int pn = a.n * d.n;

  // Reachability over all product transitions.
  std::vector<bool> reach(static_cast<size_t>(pn), false);
  std::vector<int> stack{pid(a.initial, d.initial)};
  reach[static_cast<size_t>(stack[0])] = true;
  auto oidx = a.out_index();
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    int q = x / d.n, s = x % d.n;
    for (int ti : oidx[static_cast<size_t>(q)]) {
      const Transition& t = a.trans[static_cast<size_t>(ti)];
      const Transition* dt =
          dstep[static_cast<size_t>(s) * d.alphabet.size() +
                static_cast<size_t>(letter_map[static_cast<size_t>(t.letter)])];
      int y = pid(t.dst, dt->dst);
      if (!reach[static_cast<size_t>(y)]) {
        reach[static_cast<size_t>(y)] = true;
        stack.push_back(y);
      }
    }
  }

  // a-normal-only product subgraph on reachable vertices; look for an SCC
  // containing an internal edge whose d-kind is CoBuchi.
  std::vector<std::vector<int>> adj(static_cast<size_t>(pn));
  for (int x = 0; x < pn; ++x) {
    if (!reach[static_cast<size_t>(x)]) continue;
    int q = x / d.n, s = x % d.n;
    for (int ti : oidx[static_cast<size_t>(q)]) {
      const Transition& t = a.trans[static_cast<size_t>(ti)];
      if (t.kind != Kind::Normal) continue;
      const Transition* dt =
          dstep[static_cast<size_t>(s) * d.alphabet.size() +
                static_cast<size_t>(letter_map[static_cast<size_t>(t.letter)])];
      adj[static_cast<size_t>(x)].push_back(pid(t.dst, dt->dst));
    }
  }
  SccResult scc = strongly_connected_components(adj);
  for (int x = 0; x < pn; ++x) {
    if (!reach[static_cast<size_t>(x)]) continue;
    int q = x / d.n, s = x % d.n;
    for (int ti : oidx[static_cast<size_t>(q)]) {
      const Transition& t = a.trans[static_cast<size_t>(ti)];
      if (t.kind != Kind::Normal) continue;
      const Transition* dt =
          dstep[static_cast<size_t>(s) * d.alphabet.size() +
                static_cast<size_t>(letter_map[static_cast<size_t>(t.letter)])];
      if (dt->kind != Kind::CoBuchi) continue;
      int y = pid(t.dst, dt->dst);
      if (scc.comp[static_cast<size_t>(x)] == scc.comp[static_cast<size_t>(y)]) return false;
    }
  }
  return true;
}

// Exact language equality against a deterministic recognizer, via breakpoint
// determinization for the converse inclusion.
inline bool language_equal(const CoBuchiAutomaton& a, const CoBuchiAutomaton& d) {
  if (!language_contained(a, d)) return false;
  CoBuchiAutomaton da = determinize_breakpoint(a);
  return language_contained(d, da);
}

}  // namespace poslab
