#pragma once

#include <boost/rational.hpp>
#include <functional>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "poslab/automaton.hpp"
#include "poslab/catalog_automata.hpp"
#include "poslab/cycle_criteria.hpp"
#include "poslab/cycles.hpp"
#include "poslab/graph.hpp"
#include "poslab/language.hpp"
#include "poslab/resolver.hpp"
#include "poslab/rng.hpp"
#include "poslab/union_automaton.hpp"

namespace poslab {

using Rational = boost::rational<long long>;

enum class CycleMethod {
  None,
  ScaledNonPositive,  // fails iff some cycle has sum(mul*w + add) > 0
  ParityCycles,       // fails iff some cycle's maximal priority is odd
  RequiredLetters,    // fails iff some cycle misses a required letter
};

// Semantic descriptor of a prefix-independent winning set: an ultimately
// periodic membership oracle, optionally a deterministic recognizer, a cycle
// criterion for graph satisfaction, a catalog monotone automaton, and
// neutral-letter metadata.
struct Objective {
  std::string key;
  std::string family;
  Alphabet alphabet;
  std::function<bool(const UPWord&)> member;

  std::optional<CoBuchiAutomaton> recognizer;    // deterministic, complete, exact
  std::optional<CoBuchiAutomaton> hd_automaton;  // saturated catalog automaton, exact
  bool hd_automaton_monotone = false;

  CycleMethod cycle_method = CycleMethod::None;
  long long scale_mul = 1, scale_add = 0;
  bool scale_by_size = false;  // multiplier |V|+1 (strict mean-threshold test)
  std::vector<Letter> required_letters;

  std::optional<std::pair<Letter, bool>> neutral;  // (letter, strong?)
  bool prefix_independent = true;
  bool positional_finite = false;
  bool positional_arbitrary = false;
  bool trivial_on_finite = false;

  bool up_member(const UPWord& x) const {
    if (x.v.empty()) throw std::invalid_argument("up_member: empty period");
    for (Letter c : x.u)
      if (c < 0 || c >= alphabet.size()) throw std::invalid_argument("up_member: letter out of alphabet");
    for (Letter c : x.v)
      if (c < 0 || c >= alphabet.size()) throw std::invalid_argument("up_member: letter out of alphabet");
    return member(x);
  }

  bool up_member_via_recognizer(const UPWord& x) const {
    if (!recognizer) throw std::invalid_argument("up_member_via_recognizer: no recognizer");
    return run_deterministic_up(*recognizer, x).accepted;
  }
};

// ---------------------------------------------------------------------------
// Graph satisfaction: L(g) inside the winning set, with a violating lasso on
// failure.
// ---------------------------------------------------------------------------
struct Satisfaction {
  bool ok = false;
  std::optional<Lasso> violation;
};

// Product of g with a deterministic recognizer, started from every vertex of
// g: a violating path exists iff some product SCC (over states reachable from
// the start set) contains a CoBuchi-kind product edge.
inline Satisfaction satisfies_via_recognizer(const Graph& g, const CoBuchiAutomaton& d) {
  std::vector<int> letter_map(static_cast<size_t>(g.alphabet.size()), -1);
  for (Letter c = 0; c < g.alphabet.size(); ++c) {
    auto t = d.alphabet.find(g.alphabet.name(c));
    if (!t) throw std::invalid_argument("satisfies_via_recognizer: letter missing in recognizer");
    letter_map[static_cast<size_t>(c)] = *t;
  }
  std::vector<const Transition*> dstep(
      static_cast<size_t>(d.n) * static_cast<size_t>(d.alphabet.size()), nullptr);
  for (const Transition& t : d.trans)
    dstep[static_cast<size_t>(t.src) * d.alphabet.size() + static_cast<size_t>(t.letter)] = &t;

  int pn = g.n * d.n;
  auto pid = [&](int v, int s) { return v * d.n + s; };

  // Product graph; remembers the g-edge behind each product edge.
  Graph prod;
  prod.alphabet = Alphabet::symbols({"N", "F"});
  prod.n = pn;
  std::vector<Edge> orig(0);
  std::vector<std::vector<std::pair<Edge, Edge>>> pout(static_cast<size_t>(pn));
  for (const Edge& e : g.edges) {
    for (int s = 0; s < d.n; ++s) {
      const Transition* dt = dstep[static_cast<size_t>(s) * d.alphabet.size() +
                                   static_cast<size_t>(letter_map[static_cast<size_t>(e.letter)])];
      Edge pe{pid(e.src, s), dt->kind == Kind::CoBuchi ? 1 : 0, pid(e.dst, dt->dst)};
      prod.edges.push_back(pe);
      pout[static_cast<size_t>(pe.src)].push_back({pe, e});
    }
  }
  prod.normalize();

  // Reachable part from every (v, initial).
  std::vector<bool> reach(static_cast<size_t>(pn), false);
  std::vector<int> stack, starts;
  for (int v = 0; v < g.n; ++v) {
    starts.push_back(pid(v, d.initial));
    reach[static_cast<size_t>(pid(v, d.initial))] = true;
    stack.push_back(pid(v, d.initial));
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& [pe, ge] : pout[static_cast<size_t>(x)])
      if (!reach[static_cast<size_t>(pe.dst)]) {
        reach[static_cast<size_t>(pe.dst)] = true;
        stack.push_back(pe.dst);
      }
  }

  auto keep = [&](const Edge& pe) { return reach[static_cast<size_t>(pe.src)]; };
  auto marked = [&](const Edge& pe) { return pe.letter == 1; };
  auto cyc = find_cycle_with_marked_edge(prod, keep, marked);
  if (!cyc) return Satisfaction{true, std::nullopt};

  // Stem from a start vertex to the cycle, then project to g.
  auto stem = bfs_path(prod, starts, cyc->front().src, keep);
  auto project = [&](const std::vector<Edge>& pes) {
    std::vector<Edge> out;
    for (const Edge& pe : pes) {
      bool found = false;
      for (const auto& [cand, ge] : pout[static_cast<size_t>(pe.src)])
        if (cand == pe && !found) {
          out.push_back(ge);
          found = true;
        }
      if (!found) throw std::logic_error("satisfies_via_recognizer: projection failed");
    }
    return out;
  };
  Lasso l;
  l.stem = project(*stem);
  l.cycle = project(*cyc);
  return Satisfaction{false, l};
}

inline Satisfaction graph_satisfies(const Objective& w, const Graph& g) {
  require_valid(g, "graph_satisfies");
  for (const Edge& e : g.edges)
    if (!w.alphabet.find(g.alphabet.name(e.letter)))
      throw std::invalid_argument("graph_satisfies: graph letter outside objective alphabet");

  if (w.recognizer) return satisfies_via_recognizer(g, *w.recognizer);

  switch (w.cycle_method) {
    case CycleMethod::ScaledNonPositive: {
      // Strict mean thresholds scale by |V|: cycle means are rationals with
      // denominator at most |V|, so mean < 0 iff |V|*sum + len <= 0.
      long long mul = w.scale_by_size ? static_cast<long long>(g.n) : w.scale_mul;
      long long add = w.scale_add;
      auto weight = [&](const Edge& e) { return mul * g.alphabet.value(e.letter) + add; };
      auto cyc = find_positive_cycle(g, weight);
      if (!cyc) return Satisfaction{true, std::nullopt};
      Lasso l;
      auto stem = bfs_path(
          g, [&] {
            std::vector<int> all;
            for (int v = 0; v < g.n; ++v) all.push_back(v);
            return all;
          }(),
          cyc->front().src, [](const Edge&) { return true; });
      l.stem = *stem;
      l.cycle = *cyc;
      return Satisfaction{false, l};
    }
    case CycleMethod::ParityCycles: {
      long long maxp = 0;
      for (Letter c = 0; c < g.alphabet.size(); ++c)
        maxp = std::max(maxp, g.alphabet.value(c));
      for (long long p = maxp; p >= 1; --p) {
        if (p % 2 == 0) continue;
        auto keep = [&](const Edge& e) { return g.alphabet.value(e.letter) <= p; };
        auto marked = [&](const Edge& e) { return g.alphabet.value(e.letter) == p; };
        auto cyc = find_cycle_with_marked_edge(g, keep, marked);
        if (cyc) {
          Lasso l;
          l.cycle = *cyc;
          return Satisfaction{false, l};
        }
      }
      return Satisfaction{true, std::nullopt};
    }
    case CycleMethod::RequiredLetters: {
      for (Letter req : w.required_letters) {
        auto wname = w.alphabet.name(req);
        auto keep = [&](const Edge& e) { return g.alphabet.name(e.letter) != wname; };
        auto cyc = find_cycle_with_marked_edge(g, keep, [](const Edge&) { return true; });
        if (cyc) {
          Lasso l;
          l.cycle = *cyc;
          return Satisfaction{false, l};
        }
      }
      return Satisfaction{true, std::nullopt};
    }
    case CycleMethod::None:
      break;
  }
  throw std::invalid_argument("graph_satisfies: objective has neither recognizer nor cycle criterion");
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------
namespace detail {

inline long long period_sum(const Alphabet& alphabet, const UPWord& x) {
  long long s = 0;
  for (Letter c : x.v) s += alphabet.value(c);
  return s;
}

// True when the periodic word v^omega contains an infix matching `re`.
// An occurrence exists iff one starts within the first period and any
// shortest occurrence spans at most (pattern NFA states) periods, so scanning
// six copies of the period is exhaustive for the patterns in this catalog.
inline bool periodic_word_matches(const std::string& period, const std::regex& re) {
  std::string s;
  for (int i = 0; i < 6; ++i) s += period;
  return std::regex_search(s, re);
}

inline std::string letters_to_string(const Alphabet& alphabet, const std::vector<Letter>& v) {
  std::string s;
  for (Letter c : v) s += alphabet.name(c);
  return s;
}

}  // namespace detail

inline Objective make_parity(int d) {
  if (d < 1) throw std::invalid_argument("parity: d must be >= 1");
  Objective w;
  w.key = "parity:" + std::to_string(d);
  w.family = "parity";
  w.alphabet = Alphabet::weights(0, d);
  Alphabet alpha = w.alphabet;
  w.member = [alpha](const UPWord& x) {
    long long maxp = 0;
    for (Letter c : x.v) maxp = std::max(maxp, alpha.value(c));
    return maxp % 2 == 0;
  };
  w.cycle_method = CycleMethod::ParityCycles;
  if (d == 1) {
    CoBuchiAutomaton r;
    r.alphabet = w.alphabet;
    r.n = 1;
    r.initial = 0;
    r.trans = {Transition{0, 0, Kind::Normal, 0}, Transition{0, 1, Kind::CoBuchi, 0}};
    r.normalize();
    w.recognizer = r;
    w.hd_automaton = finitely_many_letter_automaton(w.alphabet, "1");
    w.hd_automaton_monotone = true;
  }
  w.neutral = {{w.alphabet.require("0"), true}};
  w.positional_finite = w.positional_arbitrary = true;
  return w;
}

inline Objective make_cobuchi() {
  Objective w;
  w.key = "cobuchi";
  w.family = "cobuchi";
  w.alphabet = Alphabet::symbols({"N", "F"});
  Letter lf = w.alphabet.require("F");
  w.member = [lf](const UPWord& x) {
    for (Letter c : x.v)
      if (c == lf) return false;
    return true;
  };
  CoBuchiAutomaton r;
  r.alphabet = w.alphabet;
  r.n = 1;
  r.initial = 0;
  r.trans = {Transition{0, w.alphabet.require("N"), Kind::Normal, 0},
             Transition{0, lf, Kind::CoBuchi, 0}};
  r.normalize();
  w.recognizer = r;
  w.hd_automaton = finitely_many_letter_automaton(w.alphabet, "F");
  w.hd_automaton_monotone = true;
  w.neutral = {{w.alphabet.require("N"), true}};
  w.positional_finite = w.positional_arbitrary = true;
  return w;
}

// Finitely many b's over {a, b}.
inline Objective make_fin_b() {
  Objective w;
  w.key = "fin_b";
  w.family = "fin_b";
  w.alphabet = Alphabet::symbols({"a", "b"});
  Letter lb = w.alphabet.require("b");
  w.member = [lb](const UPWord& x) {
    for (Letter c : x.v)
      if (c == lb) return false;
    return true;
  };
  CoBuchiAutomaton r;
  r.alphabet = w.alphabet;
  r.n = 1;
  r.initial = 0;
  r.trans = {Transition{0, w.alphabet.require("a"), Kind::Normal, 0},
             Transition{0, lb, Kind::CoBuchi, 0}};
  r.normalize();
  w.recognizer = r;
  w.hd_automaton = finitely_many_letter_automaton(w.alphabet, "b");
  w.hd_automaton_monotone = true;
  w.neutral = {{w.alphabet.require("a"), true}};
  w.positional_finite = w.positional_arbitrary = true;
  return w;
}

// Finitely many aab infixes over {a, b}.
inline Objective make_fin_aab() {
  Objective w;
  w.key = "fin_aab";
  w.family = "fin_aab";
  PatternNfa p = aab_pattern(false);
  w.alphabet = p.alphabet;
  Alphabet alpha = w.alphabet;
  w.member = [alpha](const UPWord& x) {
    static const std::regex re("aab");
    return !detail::periodic_word_matches(detail::letters_to_string(alpha, x.v), re);
  };
  w.recognizer = pattern_recognizer(p);
  auto mono = pattern_monotone_automaton(p);
  if (mono) {
    w.hd_automaton = *mono;
    w.hd_automaton_monotone = true;
  }
  w.positional_finite = w.positional_arbitrary = true;
  return w;
}

// Finitely many aab infixes after erasing the neutral letter e; alphabet
// {a, b, e} with e strongly neutral by construction.
inline Objective make_fig1_left() {
  Objective w;
  w.key = "fig1_left";
  w.family = "fig1_left";
  PatternNfa p = aab_pattern(true);
  w.alphabet = p.alphabet;
  Alphabet alpha = w.alphabet;
  Letter le = alpha.require("e");
  w.member = [alpha, le](const UPWord& x) {
    std::vector<Letter> erased;
    for (Letter c : x.v)
      if (c != le) erased.push_back(c);
    if (erased.empty()) return true;
    static const std::regex re("aab");
    return !detail::periodic_word_matches(detail::letters_to_string(alpha, erased), re);
  };
  w.recognizer = pattern_recognizer(p);
  auto mono = pattern_monotone_automaton(p);
  if (mono) {
    w.hd_automaton = *mono;
    w.hd_automaton_monotone = true;
  }
  w.neutral = {{le, true}};
  w.positional_finite = w.positional_arbitrary = true;
  return w;
}

// Finitely many infixes in c(a*cb*)+c over {a, b, c}.
inline Objective make_fig1_right() {
  Objective w;
  w.key = "fig1_right";
  w.family = "fig1_right";
  PatternNfa p = block_pattern();
  w.alphabet = p.alphabet;
  Alphabet alpha = w.alphabet;
  w.member = [alpha](const UPWord& x) {
    static const std::regex re("c(a*cb*)+c");
    return !detail::periodic_word_matches(detail::letters_to_string(alpha, x.v), re);
  };
  w.recognizer = pattern_recognizer(p);
  auto mono = pattern_monotone_automaton(p);
  if (mono) {
    w.hd_automaton = *mono;
    w.hd_automaton_monotone = true;
  } else {
    w.hd_automaton = saturate(*w.recognizer);
  }
  w.positional_finite = w.positional_arbitrary = true;
  return w;
}

inline Objective make_bounded(int weight_bound, const char* key_family, bool strict_mean,
                              bool liminf_variant, bool mean_threshold) {
  Objective w;
  w.family = key_family;
  w.alphabet = Alphabet::weights(-weight_bound, weight_bound);
  Alphabet alpha = w.alphabet;
  if (!mean_threshold) {
    // sup of prefix sums finite <=> no positive cycle; on UP words sum(v) <= 0.
    w.member = [alpha](const UPWord& x) { return detail::period_sum(alpha, x) <= 0; };
    w.cycle_method = CycleMethod::ScaledNonPositive;
    w.scale_mul = 1;
    w.scale_add = 0;
    w.positional_finite = w.positional_arbitrary = true;
  } else if (!strict_mean) {
    // mean threshold <= 0: on UP words the Cesàro limit is sum(v)/|v|.
    w.member = [alpha](const UPWord& x) { return detail::period_sum(alpha, x) <= 0; };
    w.cycle_method = CycleMethod::ScaledNonPositive;
    w.scale_mul = 1;
    w.scale_add = 0;
    w.positional_finite = true;
    w.positional_arbitrary = false;
  } else {
    // mean threshold < 0: every cycle mean below zero; scaled by |V|+1.
    w.member = [alpha](const UPWord& x) { return detail::period_sum(alpha, x) < 0; };
    w.cycle_method = CycleMethod::ScaledNonPositive;
    w.scale_by_size = true;
    w.scale_add = 1;
    w.positional_finite = true;
    w.positional_arbitrary = !liminf_variant;
  }
  w.neutral = {{alpha.require("0"), !mean_threshold}};  // 0 strong for sums, weak for means
  return w;
}

inline Objective make_tilted(int n, int weight_bound) {
  if (n < 1) throw std::invalid_argument("tilted: n must be >= 1");
  Objective w;
  w.key = "tilted:n=" + std::to_string(n) + ",B=" + std::to_string(weight_bound);
  w.family = "tilted";
  w.alphabet = Alphabet::weights(-weight_bound, weight_bound);
  Alphabet alpha = w.alphabet;
  long long nn = n;
  w.member = [alpha, nn](const UPWord& x) {
    return nn * detail::period_sum(alpha, x) + static_cast<long long>(x.v.size()) <= 0;
  };
  w.cycle_method = CycleMethod::ScaledNonPositive;
  w.scale_mul = n;
  w.scale_add = 1;
  // A letter is neutral only if its tilted contribution w + 1/n is zero;
  // within the integers that needs n = 1 and w = -1.
  if (n == 1 && weight_bound >= 1) w.neutral = {{alpha.of_value(-1), true}};
  w.positional_finite = w.positional_arbitrary = true;
  return w;
}

inline Objective make_eni(int m, bool non_increasing) {
  Objective w;
  w.key = (non_increasing ? "eni:m=" : "end:m=") + std::to_string(m);
  w.family = non_increasing ? "eni" : "end";
  w.alphabet = Alphabet::weights(0, m);
  w.member = [](const UPWord& x) {
    for (Letter c : x.v)
      if (c != x.v[0]) return false;
    return true;
  };
  // Recognizer: remember the previous letter, flag increases (resp. drops).
  CoBuchiAutomaton r;
  r.alphabet = w.alphabet;
  r.n = m + 2;  // states 0..m = previous letter, m+1 = nothing read yet
  r.initial = m + 1;
  for (int prev = 0; prev <= m + 1; ++prev)
    for (Letter c = 0; c < r.alphabet.size(); ++c) {
      long long val = r.alphabet.value(c);
      bool bad;
      if (prev == m + 1)
        bad = false;
      else if (non_increasing)
        bad = val > prev;
      else
        bad = val < prev;
      r.trans.push_back(Transition{prev, c, bad ? Kind::CoBuchi : Kind::Normal, static_cast<int>(val)});
    }
  r.normalize();
  w.recognizer = r;
  if (non_increasing) {
    w.hd_automaton = eni_automaton(m);
    w.hd_automaton_monotone = true;
    w.positional_finite = w.positional_arbitrary = true;
  } else {
    w.positional_finite = false;
    w.positional_arbitrary = false;
  }
  return w;
}

inline Objective make_finite_support(int m) {
  Objective w;
  w.key = "finite:m=" + std::to_string(m);
  w.family = "finite";
  w.alphabet = Alphabet::weights(0, m);
  w.member = [](const UPWord&) { return true; };
  CoBuchiAutomaton r;
  r.alphabet = w.alphabet;
  r.n = 1;
  r.initial = 0;
  for (Letter c = 0; c < r.alphabet.size(); ++c) r.trans.push_back(Transition{0, c, Kind::Normal, 0});
  r.normalize();
  w.recognizer = r;
  w.hd_automaton = finite_support_automaton(m);
  w.hd_automaton_monotone = true;
  w.neutral = {{w.alphabet.require("0"), true}};
  w.positional_finite = w.positional_arbitrary = true;
  // Over a truncated alphabet every word has finite support; the objective is
  // kept to exercise the automaton shape, not its semantics.
  w.trivial_on_finite = true;
  return w;
}

// Test-only control: infinitely many a AND infinitely many b, over {a, b, n}
// with n weakly neutral. Not positional, not co-Büchi recognisable.
inline Objective make_genbuchi() {
  Objective w;
  w.key = "genbuchi";
  w.family = "genbuchi";
  w.alphabet = Alphabet::symbols({"a", "b", "n"});
  Letter la = w.alphabet.require("a"), lb = w.alphabet.require("b");
  w.member = [la, lb](const UPWord& x) {
    bool has_a = false, has_b = false;
    for (Letter c : x.v) {
      has_a |= (c == la);
      has_b |= (c == lb);
    }
    return has_a && has_b;
  };
  w.cycle_method = CycleMethod::RequiredLetters;
  w.required_letters = {la, lb};
  w.neutral = {{w.alphabet.require("n"), false}};
  w.positional_finite = false;
  w.positional_arbitrary = false;
  return w;
}

inline Objective parse_objective(const std::string& key);

// Union of two catalog objectives over a shared alphabet: membership is the
// disjunction, the exact deterministic recognizer is the round-robin resolver
// of the union automaton.
inline Objective make_union(const std::string& key_a, const std::string& key_b) {
  Objective wa = parse_objective(key_a);
  Objective wb = parse_objective(key_b);
  if (wa.alphabet != wb.alphabet)
    throw std::invalid_argument("union: parts must share an alphabet");
  if (!wa.hd_automaton || !wb.hd_automaton || !wa.hd_automaton_monotone || !wb.hd_automaton_monotone)
    throw std::invalid_argument("union: both parts need monotone catalog automata");
  Objective w;
  w.key = "union:" + key_a + "+" + key_b;
  w.family = "union";
  w.alphabet = wa.alphabet;
  auto ma = wa.member, mb = wb.member;
  w.member = [ma, mb](const UPWord& x) { return ma(x) || mb(x); };
  std::vector<CoBuchiAutomaton> parts{*wa.hd_automaton, *wb.hd_automaton};
  CoBuchiAutomaton u = union_automaton(parts);
  std::vector<Resolver> rs{max_successor_resolver(parts[0]), max_successor_resolver(parts[1])};
  Resolver rr = round_robin_resolver(rs, parts, u);
  w.hd_automaton = u;
  w.hd_automaton_monotone = true;
  w.recognizer = trim_reachable(rr.automaton);
  w.positional_finite = w.positional_arbitrary = true;
  return w;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline int param_of(const std::vector<std::string>& kvs, const std::string& name, int fallback) {
  for (const std::string& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) continue;
    if (kv.substr(0, eq) == name) return std::stoi(kv.substr(eq + 1));
  }
  return fallback;
}

}  // namespace detail

// Objective keys: parity:<d>, cobuchi, fin_b, fin_aab, fig1_left, fig1_right,
// bounded:B=<b>, mp_le_0:B=<b>, mp_lt_0:B=<b>, liminf_mp_le_0:B=<b>,
// liminf_mp_lt_0:B=<b>, tilted:n=<n>,B=<b>, eni:m=<m>, end:m=<m>,
// finite:m=<m>, genbuchi, union:<key>+<key>.
inline Objective parse_objective(const std::string& key) {
  auto colon = key.find(':');
  std::string family = key.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : key.substr(colon + 1);
  auto kvs = detail::split(rest, ',');

  if (family == "parity") {
    int d = rest.empty() ? 2 : (rest.find('=') == std::string::npos
                                    ? std::stoi(rest)
                                    : detail::param_of(kvs, "d", 2));
    Objective w = make_parity(d);
    return w;
  }
  if (family == "cobuchi") return make_cobuchi();
  if (family == "fin_b") return make_fin_b();
  if (family == "fin_aab") return make_fin_aab();
  if (family == "fig1_left") return make_fig1_left();
  if (family == "fig1_right") return make_fig1_right();
  if (family == "genbuchi") return make_genbuchi();
  int b = detail::param_of(kvs, "B", 2);
  if (family == "bounded") {
    Objective w = make_bounded(b, "bounded", false, false, false);
    w.key = "bounded:B=" + std::to_string(b);
    return w;
  }
  if (family == "mp_le_0") {
    Objective w = make_bounded(b, "mp_le_0", false, false, true);
    w.key = "mp_le_0:B=" + std::to_string(b);
    return w;
  }
  if (family == "mp_lt_0") {
    Objective w = make_bounded(b, "mp_lt_0", true, false, true);
    w.key = "mp_lt_0:B=" + std::to_string(b);
    return w;
  }
  if (family == "liminf_mp_le_0") {
    Objective w = make_bounded(b, "liminf_mp_le_0", false, true, true);
    w.key = "liminf_mp_le_0:B=" + std::to_string(b);
    return w;
  }
  if (family == "liminf_mp_lt_0") {
    Objective w = make_bounded(b, "liminf_mp_lt_0", true, true, true);
    w.key = "liminf_mp_lt_0:B=" + std::to_string(b);
    w.positional_arbitrary = false;
    return w;
  }
  if (family == "tilted") return make_tilted(detail::param_of(kvs, "n", 1), b);
  if (family == "eni") return make_eni(detail::param_of(kvs, "m", 4), true);
  if (family == "end") return make_eni(detail::param_of(kvs, "m", 4), false);
  if (family == "finite") return make_finite_support(detail::param_of(kvs, "m", 4));
  if (family == "union") {
    auto plus = rest.find('+');
    if (plus == std::string::npos) throw std::invalid_argument("union: expected union:<key>+<key>");
    return make_union(rest.substr(0, plus), rest.substr(plus + 1));
  }
  throw std::invalid_argument("unknown objective: " + key);
}

// ---------------------------------------------------------------------------
// Non ultimately-periodic words, represented by prefix generators with
// hand-verified membership tags.
// ---------------------------------------------------------------------------
struct WordGenerator {
  std::string name;
  std::function<std::vector<long long>(int)> produce;  // first k raw letters
  // (objective key, member?, justification)
  std::vector<std::tuple<std::string, bool, std::string>> known_memberships;
};

// 0 1 0 0 1 0 0 0 1 ...: growing zero blocks between single ones. Prefix
// averages stay positive and tend to zero.
inline WordGenerator zero_heavy_generator() {
  WordGenerator g;
  g.name = "zero_heavy";
  g.produce = [](int k) {
    std::vector<long long> out;
    int block = 1;
    while (static_cast<int>(out.size()) < k) {
      for (int i = 0; i < block && static_cast<int>(out.size()) < k; ++i) out.push_back(0);
      if (static_cast<int>(out.size()) < k) out.push_back(1);
      ++block;
    }
    return out;
  };
  g.known_memberships = {
      {"mp_le_0:B=2", true, "averages tend to zero from above"},
      {"mp_lt_0:B=2", false, "limsup of averages is zero, not negative"},
      {"bounded:B=2", false, "prefix sums grow without bound"},
  };
  return g;
}

// 0, 1, 2, 3, ...: strictly increasing letters.
inline WordGenerator increasing_generator() {
  WordGenerator g;
  g.name = "increasing";
  g.produce = [](int k) {
    std::vector<long long> out;
    for (int i = 0; i < k; ++i) out.push_back(i);
    return out;
  };
  g.known_memberships = {
      {"end:m=4", true, "no drops at all"},
      {"eni:m=4", false, "every step is an increase"},
  };
  return g;
}

inline std::vector<Rational> generator_prefix_averages(const WordGenerator& gen, int k) {
  std::vector<long long> w = gen.produce(k);
  std::vector<Rational> out;
  long long sum = 0;
  for (int j = 1; j <= static_cast<int>(w.size()); ++j) {
    sum += w[static_cast<size_t>(j - 1)];
    out.emplace_back(sum, j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random ultimately periodic words over an alphabet.
// ---------------------------------------------------------------------------
inline UPWord random_up_word(const Alphabet& alphabet, Rng& rng, int max_prefix = 4,
                             int max_period = 8) {
  UPWord x;
  int ulen = rng.range(0, max_prefix);
  int vlen = rng.range(1, max_period);
  for (int i = 0; i < ulen; ++i) x.u.push_back(rng.range(0, alphabet.size() - 1));
  for (int i = 0; i < vlen; ++i) x.v.push_back(rng.range(0, alphabet.size() - 1));
  return x;
}

}  // namespace poslab
