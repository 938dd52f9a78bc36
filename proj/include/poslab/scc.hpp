#pragma once

#include <vector>

namespace poslab {

// Tarjan SCC over an adjacency list. Returns comp[v] in 0..count-1; component
// ids are in reverse topological order (edges go from higher ids to lower or
// within a component).
struct SccResult {
  std::vector<int> comp;
  int count = 0;
};

inline SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  SccResult res;
  res.comp.assign(static_cast<size_t>(n), -1);
  std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<size_t>(n), false);
  std::vector<int> stack;
  int next_index = 0;

  // Iterative Tarjan: frame = (vertex, next child position).
  std::vector<std::pair<int, size_t>> frames;
  for (int start = 0; start < n; ++start) {
    if (index[static_cast<size_t>(start)] != -1) continue;
    frames.push_back({start, 0});
    while (!frames.empty()) {
      auto& [v, ci] = frames.back();
      if (ci == 0) {
        index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = next_index++;
        stack.push_back(v);
        on_stack[static_cast<size_t>(v)] = true;
      }
      bool descended = false;
      while (ci < adj[static_cast<size_t>(v)].size()) {
        int w = adj[static_cast<size_t>(v)][ci++];
        if (index[static_cast<size_t>(w)] == -1) {
          frames.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[static_cast<size_t>(w)])
          low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
      }
      if (descended) continue;
      if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
        for (;;) {
          int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<size_t>(w)] = false;
          res.comp[static_cast<size_t>(w)] = res.count;
          if (w == v) break;
        }
        ++res.count;
      }
      int child = v;
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().first;
        low[static_cast<size_t>(parent)] =
            std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(child)]);
      }
    }
  }
  return res;
}

}  // namespace poslab
