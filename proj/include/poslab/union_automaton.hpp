#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "poslab/automaton.hpp"
#include "poslab/resolver.hpp"

namespace poslab {

// Round-robin schedule over k components: blocks 0; 0,1; ...; 0..k-1; then
// the full block repeats forever, so every component index is indicated
// infinitely often. Counter values live in [0, T + k) with T = k(k+1)/2.
struct RoundRobinSchedule {
  int parts = 0;

  int counter_values() const { return parts * (parts + 1) / 2 + parts; }

  int indicated(int j) const {
    int t = parts * (parts + 1) / 2;
    if (j >= t) return j - t;
    int block = 1;
    while (j >= block) {
      j -= block;
      ++block;
    }
    return j;
  }

  int advance(int j) const {
    int t = parts * (parts + 1) / 2;
    int next = j + 1;
    return next >= t + parts ? t : next;
  }

  std::vector<int> prefix(int len) const {
    std::vector<int> out;
    int j = 0;
    for (int i = 0; i < len; ++i) {
      out.push_back(indicated(j));
      j = advance(j);
    }
    return out;
  }
};

// Disjoint union of saturated monotone automata with every CoBuchi triple
// and all normal transitions from part i to part j for i > j. The order
// stacks part i above part j for i > j; the initial state is the least-rank
// state of part 0.
inline CoBuchiAutomaton union_automaton(const std::vector<CoBuchiAutomaton>& parts) {
  if (parts.empty()) throw std::invalid_argument("union_automaton: no parts");
  for (const CoBuchiAutomaton& p : parts) {
    if (p.alphabet != parts[0].alphabet)
      throw std::invalid_argument("union_automaton: parts over different alphabets");
    if (!p.ordered()) throw std::invalid_argument("union_automaton: part without order");
    if (!is_saturated(p)) throw std::invalid_argument("union_automaton: part not saturated");
    if (check_monotone_automaton(p))
      throw std::invalid_argument("union_automaton: part not monotone");
  }

  CoBuchiAutomaton u;
  u.alphabet = parts[0].alphabet;
  std::vector<int> offset;
  int total = 0, rank_base = 0;
  for (const CoBuchiAutomaton& p : parts) {
    offset.push_back(total);
    total += p.n;
  }
  u.n = total;
  u.rank.resize(static_cast<size_t>(total));
  u.names.resize(static_cast<size_t>(total));
  for (size_t i = 0; i < parts.size(); ++i) {
    const CoBuchiAutomaton& p = parts[i];
    for (int q = 0; q < p.n; ++q) {
      u.rank[static_cast<size_t>(offset[i] + q)] = rank_base + p.rank[static_cast<size_t>(q)];
      u.names[static_cast<size_t>(offset[i] + q)] = "p" + std::to_string(i) + "_" + p.display_name(q);
    }
    rank_base += p.n;
    for (const Transition& t : p.trans)
      if (t.kind == Kind::Normal)
        u.trans.push_back(Transition{offset[i] + t.src, t.letter, Kind::Normal, offset[i] + t.dst});
  }
  // Cross normal transitions from higher parts to all lower parts.
  for (size_t i = 1; i < parts.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      for (int q = 0; q < parts[i].n; ++q)
        for (Letter c = 0; c < u.alphabet.size(); ++c)
          for (int q2 = 0; q2 < parts[j].n; ++q2)
            u.trans.push_back(Transition{offset[i] + q, c, Kind::Normal, offset[j] + q2});
  u = saturate(std::move(u));
  for (int q = 0; q < parts[0].n; ++q)
    if (parts[0].rank[static_cast<size_t>(q)] == 0) u.initial = offset[0] + q;
  return u;
}

// Resolver for the union: all component resolvers run synchronously, a
// round-robin counter points at one of them; the step is normal exactly when
// the indicated resolver moves normally, otherwise the counter advances.
// Each part resolver must be sound for its part, and each part's initial
// state must be its least-rank state so the morphism preserves the root.
inline Resolver round_robin_resolver(const std::vector<Resolver>& part_resolvers,
                                     const std::vector<CoBuchiAutomaton>& parts,
                                     const CoBuchiAutomaton& united) {
  if (part_resolvers.size() != parts.size() || parts.empty())
    throw std::invalid_argument("round_robin_resolver: part count mismatch");
  for (size_t i = 0; i < parts.size(); ++i) {
    require_resolver(part_resolvers[i], parts[i], "round_robin_resolver");
    if (parts[i].rank[static_cast<size_t>(parts[i].initial)] != 0)
      throw std::invalid_argument("round_robin_resolver: part initial is not its least state");
  }
  int k = static_cast<int>(parts.size());
  RoundRobinSchedule sched{k};
  int cvals = sched.counter_values();

  std::vector<int> offset;
  int total = 0;
  for (const CoBuchiAutomaton& p : parts) {
    offset.push_back(total);
    total += p.n;
  }

  // State id: mixed radix over part-resolver states, then the counter.
  std::vector<int> radix;
  for (const Resolver& r : part_resolvers) radix.push_back(r.automaton.n);
  long long tuple_count = 1;
  for (int r : radix) tuple_count *= r;
  if (tuple_count * cvals > 2'000'000)
    throw std::invalid_argument("round_robin_resolver: state space too large");

  auto encode = [&](const std::vector<int>& rs, int j) {
    long long x = 0;
    for (int i = k - 1; i >= 0; --i) x = x * radix[static_cast<size_t>(i)] + rs[static_cast<size_t>(i)];
    return static_cast<int>(x * cvals + j);
  };
  auto decode = [&](int id, std::vector<int>& rs, int& j) {
    j = id % cvals;
    long long x = id / cvals;
    rs.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      rs[static_cast<size_t>(i)] = static_cast<int>(x % radix[static_cast<size_t>(i)]);
      x /= radix[static_cast<size_t>(i)];
    }
  };

  // Per-part deterministic step tables.
  std::vector<std::vector<const Transition*>> step(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    const CoBuchiAutomaton& ra = part_resolvers[static_cast<size_t>(i)].automaton;
    step[static_cast<size_t>(i)].assign(
        static_cast<size_t>(ra.n) * static_cast<size_t>(ra.alphabet.size()), nullptr);
    for (const Transition& t : ra.trans)
      step[static_cast<size_t>(i)][static_cast<size_t>(t.src) * ra.alphabet.size() +
                                   static_cast<size_t>(t.letter)] = &t;
  }

  Resolver out;
  out.automaton.alphabet = united.alphabet;
  out.automaton.n = static_cast<int>(tuple_count * cvals);
  std::vector<int> inits;
  for (const Resolver& r : part_resolvers) inits.push_back(r.automaton.initial);
  out.automaton.initial = encode(inits, 0);
  out.morphism.resize(static_cast<size_t>(out.automaton.n));

  std::vector<int> rs;
  for (int id = 0; id < out.automaton.n; ++id) {
    int j;
    decode(id, rs, j);
    int ind = sched.indicated(j);
    out.morphism[static_cast<size_t>(id)] =
        offset[static_cast<size_t>(ind)] +
        part_resolvers[static_cast<size_t>(ind)]
            .morphism[static_cast<size_t>(rs[static_cast<size_t>(ind)])];
    for (Letter c = 0; c < united.alphabet.size(); ++c) {
      std::vector<int> rs2(static_cast<size_t>(k));
      Kind kind = Kind::Normal;
      for (int i = 0; i < k; ++i) {
        const Transition* t =
            step[static_cast<size_t>(i)]
                [static_cast<size_t>(rs[static_cast<size_t>(i)]) *
                     united.alphabet.size() +
                 static_cast<size_t>(c)];
        rs2[static_cast<size_t>(i)] = t->dst;
        if (i == ind && t->kind == Kind::CoBuchi) kind = Kind::CoBuchi;
      }
      int j2 = (kind == Kind::CoBuchi) ? sched.advance(j) : j;
      out.automaton.trans.push_back(Transition{id, c, kind, encode(rs2, j2)});
    }
  }
  out.automaton.normalize();
  require_resolver(out, united, "round_robin_resolver(result)");
  return out;
}

}  // namespace poslab
