#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poslab/automaton.hpp"

namespace poslab {

// Witness of history-determinism: a deterministic automaton together with a
// state map into the target automaton that preserves transitions (with their
// kinds) and the initial state.
struct Resolver {
  CoBuchiAutomaton automaton;  // deterministic and complete
  std::vector<int> morphism;   // automaton state -> target state
};

// First violated requirement, as text, or nullopt when the resolver is valid
// for `target`.
inline std::optional<std::string> resolver_violation(const Resolver& r,
                                                     const CoBuchiAutomaton& target) {
  if (!is_deterministic(r.automaton)) return "resolver automaton is not deterministic";
  if (r.morphism.size() != static_cast<size_t>(r.automaton.n)) return "morphism size mismatch";
  for (int q : r.morphism)
    if (q < 0 || q >= target.n) return "morphism image out of range";
  if (r.morphism[static_cast<size_t>(r.automaton.initial)] != target.initial)
    return "morphism does not preserve the initial state";
  for (const Transition& t : r.automaton.trans) {
    auto c = target.alphabet.find(r.automaton.alphabet.name(t.letter));
    if (!c) return "letter missing in target alphabet: " + r.automaton.alphabet.name(t.letter);
    if (!target.has_transition(r.morphism[static_cast<size_t>(t.src)], *c, t.kind,
                               r.morphism[static_cast<size_t>(t.dst)]))
      return "transition image missing in target";
  }
  return std::nullopt;
}

inline void require_resolver(const Resolver& r, const CoBuchiAutomaton& target, const char* ctx) {
  auto v = resolver_violation(r, target);
  if (v) throw std::invalid_argument(std::string(ctx) + ": " + *v);
}

// Composition with an automaton morphism phi : a -> a'. The deterministic
// automaton is unchanged; only the state map is post-composed.
inline Resolver compose_resolver(const Resolver& r, const std::vector<int>& phi,
                                 const CoBuchiAutomaton& a, const CoBuchiAutomaton& a_prime) {
  require_resolver(r, a, "compose_resolver");
  if (phi.size() != static_cast<size_t>(a.n))
    throw std::invalid_argument("compose_resolver: morphism size mismatch");
  Resolver out;
  out.automaton = r.automaton;
  out.morphism.reserve(r.morphism.size());
  for (int q : r.morphism) out.morphism.push_back(phi.at(static_cast<size_t>(q)));
  require_resolver(out, a_prime, "compose_resolver(result)");
  return out;
}

// Per-sample outcome of replaying a resolver on a word of the target's
// language.
struct SoundnessReport {
  int checked = 0;   // samples in L(target)
  int accepted = 0;  // of those, samples the resolver run accepted
  std::vector<UPWord> failures;
  bool sound_on_samples() const { return failures.empty(); }
};

// Replays each sample with x in L(target) through the resolver and checks the
// run accepts. Membership in L(target) is decided by the exact ultimately
// periodic acceptance check.
inline SoundnessReport check_resolver_sound(const Resolver& r, const CoBuchiAutomaton& target,
                                            const std::vector<UPWord>& samples) {
  require_resolver(r, target, "check_resolver_sound");
  SoundnessReport rep;
  for (const UPWord& x : samples) {
    if (!accepts_up(target, x)) continue;
    ++rep.checked;
    DetRun run = run_deterministic_up(r.automaton, x);
    if (run.accepted)
      ++rep.accepted;
    else
      rep.failures.push_back(x);
  }
  return rep;
}

// The identity-shaped resolver of a deterministic automaton.
inline Resolver identity_resolver(const CoBuchiAutomaton& a) {
  if (!is_deterministic(a)) throw std::invalid_argument("identity_resolver: not deterministic");
  Resolver r;
  r.automaton = a;
  r.morphism.resize(static_cast<size_t>(a.n));
  for (int q = 0; q < a.n; ++q) r.morphism[static_cast<size_t>(q)] = q;
  return r;
}

// Pruning resolver for a saturated monotone automaton: on each letter follow
// the maximal normal successor when one exists (successor sets are downward
// closed, so this is the best choice), and otherwise take a CoBuchi jump to
// the maximal state, which has every continuation available.
inline Resolver max_successor_resolver(const CoBuchiAutomaton& a) {
  if (!a.ordered()) throw std::invalid_argument("max_successor_resolver: no order");
  if (!is_saturated(a)) throw std::invalid_argument("max_successor_resolver: not saturated");
  int top = 0;
  for (int q = 0; q < a.n; ++q)
    if (a.rank[static_cast<size_t>(q)] > a.rank[static_cast<size_t>(top)]) top = q;

  Resolver r;
  r.automaton.alphabet = a.alphabet;
  r.automaton.n = a.n;
  r.automaton.initial = a.initial;
  r.automaton.names = a.names;
  r.automaton.rank = a.rank;
  for (int q = 0; q < a.n; ++q) {
    for (Letter c = 0; c < a.alphabet.size(); ++c) {
      int best = -1;
      for (const Transition& t : a.trans) {
        if (t.src != q || t.letter != c || t.kind != Kind::Normal) continue;
        if (best == -1 || a.rank[static_cast<size_t>(t.dst)] > a.rank[static_cast<size_t>(best)])
          best = t.dst;
      }
      if (best >= 0)
        r.automaton.trans.push_back(Transition{q, c, Kind::Normal, best});
      else
        r.automaton.trans.push_back(Transition{q, c, Kind::CoBuchi, top});
    }
  }
  r.automaton.normalize();
  r.morphism.resize(static_cast<size_t>(a.n));
  for (int q = 0; q < a.n; ++q) r.morphism[static_cast<size_t>(q)] = q;
  require_resolver(r, a, "max_successor_resolver");
  return r;
}

}  // namespace poslab
