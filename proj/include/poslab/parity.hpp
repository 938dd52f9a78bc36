#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace poslab {

// Max-parity game on vertex priorities; Eve wins a play iff the limsup of
// the visited priorities is even.
struct ParityGame {
  int n = 0;
  std::vector<bool> eve;                 // controller per vertex
  std::vector<int> priority;             // >= 0
  std::vector<std::vector<int>> succ;    // nonempty per vertex
};

struct ParitySolution {
  std::vector<bool> eve_wins;
  std::vector<int> eve_strategy;   // successor for Eve vertices in her region, else -1
  std::vector<int> adam_strategy;  // successor for Adam vertices in his region, else -1
};

namespace detail {

// Attractor of `targets` for `player` inside `active`. Fills strat[v] for
// player-owned vertices added by the attraction (not for the targets).
inline std::vector<bool> attractor(const ParityGame& g, bool player, const std::vector<bool>& targets,
                                   const std::vector<bool>& active, std::vector<int>& strat) {
  std::vector<std::vector<int>> preds(static_cast<size_t>(g.n));
  std::vector<int> out_count(static_cast<size_t>(g.n), 0);
  for (int v = 0; v < g.n; ++v) {
    if (!active[static_cast<size_t>(v)]) continue;
    for (int w : g.succ[static_cast<size_t>(v)]) {
      if (!active[static_cast<size_t>(w)]) continue;
      preds[static_cast<size_t>(w)].push_back(v);
      ++out_count[static_cast<size_t>(v)];
    }
  }
  std::vector<bool> in = targets;
  std::vector<int> queue;
  for (int v = 0; v < g.n; ++v)
    if (active[static_cast<size_t>(v)] && in[static_cast<size_t>(v)]) queue.push_back(v);
  while (!queue.empty()) {
    int w = queue.back();
    queue.pop_back();
    for (int v : preds[static_cast<size_t>(w)]) {
      if (in[static_cast<size_t>(v)]) continue;
      if (g.eve[static_cast<size_t>(v)] == player) {
        in[static_cast<size_t>(v)] = true;
        strat[static_cast<size_t>(v)] = w;
        queue.push_back(v);
      } else {
        if (--out_count[static_cast<size_t>(v)] == 0) {
          in[static_cast<size_t>(v)] = true;
          queue.push_back(v);
        }
      }
    }
  }
  return in;
}

inline void zielonka(const ParityGame& g, const std::vector<bool>& active, ParitySolution& sol) {
  int p = -1;
  for (int v = 0; v < g.n; ++v)
    if (active[static_cast<size_t>(v)]) p = std::max(p, g.priority[static_cast<size_t>(v)]);
  if (p < 0) return;  // empty subgame
  bool player = (p % 2 == 0);  // true = Eve

  std::vector<bool> tops(static_cast<size_t>(g.n), false);
  for (int v = 0; v < g.n; ++v)
    if (active[static_cast<size_t>(v)] && g.priority[static_cast<size_t>(v)] == p)
      tops[static_cast<size_t>(v)] = true;

  std::vector<int> astrat(static_cast<size_t>(g.n), -1);
  std::vector<bool> attr = attractor(g, player, tops, active, astrat);

  std::vector<bool> rest(static_cast<size_t>(g.n), false);
  bool rest_empty = true;
  for (int v = 0; v < g.n; ++v)
    if (active[static_cast<size_t>(v)] && !attr[static_cast<size_t>(v)]) {
      rest[static_cast<size_t>(v)] = true;
      rest_empty = false;
    }

  ParitySolution sub;
  sub.eve_wins.assign(static_cast<size_t>(g.n), false);
  sub.eve_strategy.assign(static_cast<size_t>(g.n), -1);
  sub.adam_strategy.assign(static_cast<size_t>(g.n), -1);
  if (!rest_empty) zielonka(g, rest, sub);

  bool opponent_region_empty = true;
  for (int v = 0; v < g.n; ++v) {
    if (!rest[static_cast<size_t>(v)]) continue;
    bool eve_v = sub.eve_wins[static_cast<size_t>(v)];
    if (eve_v != player) opponent_region_empty = false;
  }

  auto& my_strat = player ? sol.eve_strategy : sol.adam_strategy;
  auto& my_sub_strat = player ? sub.eve_strategy : sub.adam_strategy;

  if (opponent_region_empty) {
    // `player` wins everything in `active`: loop through the top priority or
    // defer to the recursive strategy.
    for (int v = 0; v < g.n; ++v) {
      if (!active[static_cast<size_t>(v)]) continue;
      sol.eve_wins[static_cast<size_t>(v)] = player;
      if (g.eve[static_cast<size_t>(v)] != player) continue;
      if (rest[static_cast<size_t>(v)]) {
        my_strat[static_cast<size_t>(v)] = my_sub_strat[static_cast<size_t>(v)];
      } else if (tops[static_cast<size_t>(v)]) {
        for (int w : g.succ[static_cast<size_t>(v)])
          if (active[static_cast<size_t>(w)]) {
            my_strat[static_cast<size_t>(v)] = w;
            break;
          }
      } else {
        my_strat[static_cast<size_t>(v)] = astrat[static_cast<size_t>(v)];
      }
    }
    return;
  }

  // Opponent wins part of the subgame; attract to it and re-solve the rest.
  std::vector<bool> opp_region(static_cast<size_t>(g.n), false);
  for (int v = 0; v < g.n; ++v)
    if (rest[static_cast<size_t>(v)] && sub.eve_wins[static_cast<size_t>(v)] != player)
      opp_region[static_cast<size_t>(v)] = true;

  std::vector<int> bstrat(static_cast<size_t>(g.n), -1);
  std::vector<bool> battr = attractor(g, !player, opp_region, active, bstrat);

  std::vector<bool> remaining(static_cast<size_t>(g.n), false);
  bool remaining_empty = true;
  for (int v = 0; v < g.n; ++v)
    if (active[static_cast<size_t>(v)] && !battr[static_cast<size_t>(v)]) {
      remaining[static_cast<size_t>(v)] = true;
      remaining_empty = false;
    }

  ParitySolution fin;
  fin.eve_wins.assign(static_cast<size_t>(g.n), false);
  fin.eve_strategy.assign(static_cast<size_t>(g.n), -1);
  fin.adam_strategy.assign(static_cast<size_t>(g.n), -1);
  if (!remaining_empty) zielonka(g, remaining, fin);

  auto& opp_strat = player ? sol.adam_strategy : sol.eve_strategy;
  auto& opp_sub_strat = player ? sub.adam_strategy : sub.eve_strategy;

  for (int v = 0; v < g.n; ++v) {
    if (!active[static_cast<size_t>(v)]) continue;
    if (battr[static_cast<size_t>(v)]) {
      sol.eve_wins[static_cast<size_t>(v)] = !player;
      if (g.eve[static_cast<size_t>(v)] == !player) {
        if (opp_region[static_cast<size_t>(v)])
          opp_strat[static_cast<size_t>(v)] = opp_sub_strat[static_cast<size_t>(v)];
        else
          opp_strat[static_cast<size_t>(v)] = bstrat[static_cast<size_t>(v)];
      }
    } else {
      sol.eve_wins[static_cast<size_t>(v)] = fin.eve_wins[static_cast<size_t>(v)];
      sol.eve_strategy[static_cast<size_t>(v)] = fin.eve_strategy[static_cast<size_t>(v)];
      sol.adam_strategy[static_cast<size_t>(v)] = fin.adam_strategy[static_cast<size_t>(v)];
    }
  }
}

}  // namespace detail

inline ParitySolution solve_parity(const ParityGame& g) {
  for (int v = 0; v < g.n; ++v)
    if (g.succ[static_cast<size_t>(v)].empty())
      throw std::invalid_argument("solve_parity: vertex without successor");
  ParitySolution sol;
  sol.eve_wins.assign(static_cast<size_t>(g.n), false);
  sol.eve_strategy.assign(static_cast<size_t>(g.n), -1);
  sol.adam_strategy.assign(static_cast<size_t>(g.n), -1);
  std::vector<bool> active(static_cast<size_t>(g.n), true);
  detail::zielonka(g, active, sol);
  return sol;
}

}  // namespace poslab
