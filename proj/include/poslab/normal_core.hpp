#pragma once

#include <stdexcept>
#include <vector>

#include "poslab/automaton.hpp"
#include "poslab/resolver.hpp"

namespace poslab {

struct EmptyLanguage : std::runtime_error {
  EmptyLanguage() : std::runtime_error("automaton has no cycle of normal transitions") {}
};

// States from which an infinite path of normal transitions exists: peel off
// states with no normal successor inside the remaining set until stable.
inline std::vector<bool> normal_recurrent_states(const CoBuchiAutomaton& a) {
  std::vector<bool> in(static_cast<size_t>(a.n), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int q = 0; q < a.n; ++q) {
      if (!in[static_cast<size_t>(q)]) continue;
      bool has = false;
      for (const Transition& t : a.trans)
        if (t.src == q && t.kind == Kind::Normal && in[static_cast<size_t>(t.dst)]) {
          has = true;
          break;
        }
      if (!has) {
        in[static_cast<size_t>(q)] = false;
        changed = true;
      }
    }
  }
  return in;
}

struct NormalCore {
  CoBuchiAutomaton automaton;
  std::vector<int> morphism;  // old state -> new state
  // Input with normal transitions adjacent to discarded states recoloured to
  // CoBuchi; `morphism` is a kind-preserving automaton morphism from this
  // automaton into `automaton`. Recolouring does not change the language.
  CoBuchiAutomaton recolored;
};

// Restricts the automaton to the states carrying an infinite normal path:
// transitions adjacent to discarded states become CoBuchi, the result is
// saturated and restricted, and the root moves to the least-rank surviving
// state when the old root is discarded. The returned map is the identity on
// survivors and sends everything else to the new root.
inline NormalCore normal_core(const CoBuchiAutomaton& a) {
  require_valid(a, "normal_core");
  std::vector<bool> keep = normal_recurrent_states(a);

  std::vector<int> kept;
  for (int q = 0; q < a.n; ++q)
    if (keep[static_cast<size_t>(q)]) kept.push_back(q);
  if (kept.empty()) throw EmptyLanguage();

  int new_root_old = -1;
  if (keep[static_cast<size_t>(a.initial)]) {
    new_root_old = a.initial;
  } else {
    new_root_old = kept.front();
    for (int q : kept) {
      if (a.ordered()) {
        if (a.rank[static_cast<size_t>(q)] < a.rank[static_cast<size_t>(new_root_old)])
          new_root_old = q;
      } else if (q < new_root_old) {
        new_root_old = q;
      }
    }
  }

  std::vector<int> remap(static_cast<size_t>(a.n), -1);
  for (size_t i = 0; i < kept.size(); ++i) remap[static_cast<size_t>(kept[i])] = static_cast<int>(i);

  NormalCore out;
  out.automaton.alphabet = a.alphabet;
  out.automaton.n = static_cast<int>(kept.size());
  out.automaton.initial = remap[static_cast<size_t>(new_root_old)];
  for (int q : kept) {
    if (!a.names.empty()) out.automaton.names.push_back(a.names[static_cast<size_t>(q)]);
  }
  // Normal transitions fully inside the survivors are kept as normal; the
  // saturation below supplies every CoBuchi triple, which covers all
  // transitions adjacent to discarded states.
  for (const Transition& t : a.trans)
    if (t.kind == Kind::Normal && keep[static_cast<size_t>(t.src)] && keep[static_cast<size_t>(t.dst)])
      out.automaton.trans.push_back(
          Transition{remap[static_cast<size_t>(t.src)], t.letter, Kind::Normal, remap[static_cast<size_t>(t.dst)]});
  if (a.ordered()) {
    // Ranks compress to 0..kept-1 preserving relative order.
    std::vector<std::pair<int, int>> order;  // (old rank, new index)
    for (int q : kept) order.push_back({a.rank[static_cast<size_t>(q)], remap[static_cast<size_t>(q)]});
    std::sort(order.begin(), order.end());
    out.automaton.rank.resize(kept.size());
    for (size_t i = 0; i < order.size(); ++i)
      out.automaton.rank[static_cast<size_t>(order[i].second)] = static_cast<int>(i);
  }
  out.automaton = saturate(std::move(out.automaton));

  out.morphism.resize(static_cast<size_t>(a.n));
  for (int q = 0; q < a.n; ++q)
    out.morphism[static_cast<size_t>(q)] =
        keep[static_cast<size_t>(q)] ? remap[static_cast<size_t>(q)] : out.automaton.initial;

  out.recolored = a;
  for (Transition& t : out.recolored.trans)
    if (t.kind == Kind::Normal &&
        (!keep[static_cast<size_t>(t.src)] || !keep[static_cast<size_t>(t.dst)]))
      t.kind = Kind::CoBuchi;
  out.recolored.normalize();
  return out;
}

// Lifts a resolver for `a` to a resolver for the recoloured automaton by
// flipping the kind of every resolver transition whose image was recoloured.
// An accepting run's normal tail only visits states with infinite normal
// paths, so those transitions are never recoloured and soundness carries over.
inline Resolver recolor_resolver(const Resolver& r, const CoBuchiAutomaton& a,
                                 const CoBuchiAutomaton& recolored) {
  require_resolver(r, a, "recolor_resolver");
  Resolver out = r;
  for (Transition& t : out.automaton.trans) {
    int p = r.morphism[static_cast<size_t>(t.src)];
    int p2 = r.morphism[static_cast<size_t>(t.dst)];
    auto c = recolored.alphabet.find(r.automaton.alphabet.name(t.letter));
    if (t.kind == Kind::Normal && c && !recolored.has_transition(p, *c, Kind::Normal, p2))
      t.kind = Kind::CoBuchi;
  }
  out.automaton.normalize();
  require_resolver(out, recolored, "recolor_resolver(result)");
  return out;
}

}  // namespace poslab
