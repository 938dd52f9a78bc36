#pragma once

#include <stdexcept>
#include <vector>

#include "poslab/graph.hpp"

namespace poslab {

// Depth-bounded tree unfolding. Leaves at the depth bound receive a self-loop
// on `pad_letter` so the result stays sinkless; those loops are listed in
// `padding` and are the only edges that do not project back onto the source.
struct UnfoldedTree {
  Graph tree;
  int root = 0;
  std::vector<int> origin;    // origin[t] = source vertex t unfolds
  std::vector<int> depth;     // depth[t] = distance from root
  std::vector<Edge> padding;  // pad self-loops at the leaves

  // Projection onto the source graph; a morphism on the non-padding part.
  Morphism projection() const { return Morphism{origin}; }
};

inline UnfoldedTree unfold_tree(const Graph& g, int root, int depth, Letter pad_letter) {
  require_valid(g, "unfold_tree");
  if (root < 0 || root >= g.n) throw std::invalid_argument("unfold_tree: root out of range");
  if (depth < 1) throw std::invalid_argument("unfold_tree: depth must be >= 1");
  if (pad_letter < 0 || pad_letter >= g.alphabet.size())
    throw std::invalid_argument("unfold_tree: pad letter out of range");

  UnfoldedTree t;
  t.tree.alphabet = g.alphabet;
  auto oidx = g.out_index();

  t.origin.push_back(root);
  t.depth.push_back(0);
  // Breadth-first: tree vertex i expands while depth < bound.
  for (size_t i = 0; i < t.origin.size(); ++i) {
    if (t.depth[i] == depth) {
      Edge loop{static_cast<int>(i), pad_letter, static_cast<int>(i)};
      t.tree.edges.push_back(loop);
      t.padding.push_back(loop);
      continue;
    }
    for (int ei : oidx[static_cast<size_t>(t.origin[i])]) {
      const Edge& e = g.edges[static_cast<size_t>(ei)];
      int child = static_cast<int>(t.origin.size());
      t.origin.push_back(e.dst);
      t.depth.push_back(t.depth[i] + 1);
      t.tree.edges.push_back(Edge{static_cast<int>(i), e.letter, child});
    }
  }
  t.tree.n = static_cast<int>(t.origin.size());
  t.tree.normalize();
  t.root = 0;
  return t;
}

// Restriction of the unfolded tree to the descendants of `sub_root`,
// reindexed. Used to test subtree embeddings.
inline UnfoldedTree subtree(const UnfoldedTree& t, int sub_root) {
  std::vector<bool> keep = reachable_from(t.tree, sub_root);
  std::vector<int> remap(static_cast<size_t>(t.tree.n), -1);
  UnfoldedTree s;
  s.tree.alphabet = t.tree.alphabet;
  for (int v = 0; v < t.tree.n; ++v) {
    if (!keep[static_cast<size_t>(v)]) continue;
    remap[static_cast<size_t>(v)] = s.tree.n++;
    s.origin.push_back(t.origin[static_cast<size_t>(v)]);
    s.depth.push_back(t.depth[static_cast<size_t>(v)] - t.depth[static_cast<size_t>(sub_root)]);
  }
  for (const Edge& e : t.tree.edges) {
    if (!keep[static_cast<size_t>(e.src)]) continue;
    Edge f{remap[static_cast<size_t>(e.src)], e.letter, remap[static_cast<size_t>(e.dst)]};
    s.tree.edges.push_back(f);
  }
  for (const Edge& e : t.padding)
    if (keep[static_cast<size_t>(e.src)])
      s.padding.push_back(Edge{remap[static_cast<size_t>(e.src)], e.letter, remap[static_cast<size_t>(e.dst)]});
  s.tree.normalize();
  s.root = remap[static_cast<size_t>(sub_root)];
  return s;
}

}  // namespace poslab
