#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "poslab/graph.hpp"

namespace poslab {

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

// Backtracking search for a morphism g -> h with forward checking.
// Intended for desk-scale g (candidate sets are 64-bit masks, so |h| <= 64).
// Throws BudgetExceeded when more than `budget` search nodes are expanded.
inline std::optional<Morphism> find_morphism(const Graph& g, const Graph& h,
                                             long long budget = 2'000'000) {
  require_valid(g, "find_morphism(g)");
  require_valid(h, "find_morphism(h)");
  if (h.n > 64) throw std::invalid_argument("find_morphism: target too large (> 64 vertices)");
  if (g.n == 0) return Morphism{{}};

  // Letters of g translated into h; an untranslatable used letter means no morphism.
  std::vector<int> letter_map(static_cast<size_t>(g.alphabet.size()), -1);
  for (int c = 0; c < g.alphabet.size(); ++c) {
    auto t = h.alphabet.find(g.alphabet.name(c));
    if (t) letter_map[static_cast<size_t>(c)] = *t;
  }
  for (const Edge& e : g.edges)
    if (letter_map[static_cast<size_t>(e.letter)] == -1) return std::nullopt;

  // succ_mask[u][c], pred_mask[u][c] over h.
  const std::uint64_t full = (h.n == 64) ? ~0ULL : ((1ULL << h.n) - 1);
  std::vector<std::vector<std::uint64_t>> succ(static_cast<size_t>(h.n),
                                               std::vector<std::uint64_t>(static_cast<size_t>(h.alphabet.size()), 0));
  std::vector<std::vector<std::uint64_t>> pred = succ;
  for (const Edge& e : h.edges) {
    succ[static_cast<size_t>(e.src)][static_cast<size_t>(e.letter)] |= 1ULL << e.dst;
    pred[static_cast<size_t>(e.dst)][static_cast<size_t>(e.letter)] |= 1ULL << e.src;
  }

  // g adjacency grouped per vertex.
  std::vector<std::vector<Edge>> out(static_cast<size_t>(g.n)), in(static_cast<size_t>(g.n));
  for (const Edge& e : g.edges) {
    out[static_cast<size_t>(e.src)].push_back(e);
    in[static_cast<size_t>(e.dst)].push_back(e);
  }

  std::vector<std::uint64_t> cand(static_cast<size_t>(g.n), full);
  std::vector<int> assign(static_cast<size_t>(g.n), -1);
  long long nodes = 0;

  // Narrow candidates of every neighbour of v after assigning v -> target.
  // Returns a trail of (vertex, previous mask) to undo.
  auto propagate = [&](int v, int target, std::vector<std::pair<int, std::uint64_t>>& trail) -> bool {
    for (const Edge& e : out[static_cast<size_t>(v)]) {
      int hc = letter_map[static_cast<size_t>(e.letter)];
      std::uint64_t allowed = succ[static_cast<size_t>(target)][static_cast<size_t>(hc)];
      if (e.dst == v) {
        if (!(allowed >> target & 1ULL)) return false;
        continue;
      }
      std::uint64_t& m = cand[static_cast<size_t>(e.dst)];
      std::uint64_t nm = m & allowed;
      if (nm != m) {
        trail.push_back({e.dst, m});
        m = nm;
        if (nm == 0) return false;
      }
    }
    for (const Edge& e : in[static_cast<size_t>(v)]) {
      int hc = letter_map[static_cast<size_t>(e.letter)];
      std::uint64_t allowed = pred[static_cast<size_t>(target)][static_cast<size_t>(hc)];
      if (e.src == v) continue;  // handled above
      std::uint64_t& m = cand[static_cast<size_t>(e.src)];
      std::uint64_t nm = m & allowed;
      if (nm != m) {
        trail.push_back({e.src, m});
        m = nm;
        if (nm == 0) return false;
      }
    }
    return true;
  };

  std::function<bool(int)> solve = [&](int depth) -> bool {
    if (depth == g.n) return true;
    // Most-constrained unassigned vertex.
    int v = -1;
    int best = 65;
    for (int u = 0; u < g.n; ++u) {
      if (assign[static_cast<size_t>(u)] != -1) continue;
      int pc = std::popcount(cand[static_cast<size_t>(u)]);
      if (pc < best) {
        best = pc;
        v = u;
      }
    }
    std::uint64_t m = cand[static_cast<size_t>(v)];
    while (m) {
      if (++nodes > budget) throw BudgetExceeded();
      int target = std::countr_zero(m);
      m &= m - 1;
      std::vector<std::pair<int, std::uint64_t>> trail;
      std::uint64_t saved = cand[static_cast<size_t>(v)];
      cand[static_cast<size_t>(v)] = 1ULL << target;
      assign[static_cast<size_t>(v)] = target;
      if (propagate(v, target, trail) && solve(depth + 1)) return true;
      for (auto it = trail.rbegin(); it != trail.rend(); ++it)
        cand[static_cast<size_t>(it->first)] = it->second;
      cand[static_cast<size_t>(v)] = saved;
      assign[static_cast<size_t>(v)] = -1;
    }
    return false;
  };

  if (!solve(0)) return std::nullopt;
  Morphism morph;
  morph.map.assign(assign.begin(), assign.end());
  return morph;
}

}  // namespace poslab
