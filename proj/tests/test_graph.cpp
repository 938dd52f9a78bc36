#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <numeric>

#include "poslab/cycles.hpp"
#include "poslab/graph.hpp"
#include "poslab/rng.hpp"
#include "poslab/unfold.hpp"

using namespace poslab;

namespace {

Graph self_loop() {
  return make_graph(Alphabet::symbols({"a"}), 1, {Edge{0, 0, 0}});
}

// Independent monotonicity re-check: plain triple loop over all edges and all
// vertex pairs, no rank bookkeeping shared with the library routine.
bool naive_monotone(const OrderedGraph& og) {
  const Graph& g = og.graph;
  for (const Edge& e : g.edges)
    for (int v = 0; v < g.n; ++v)
      for (int v2 = 0; v2 < g.n; ++v2)
        if (og.rank[static_cast<size_t>(v)] >= og.rank[static_cast<size_t>(e.src)] &&
            og.rank[static_cast<size_t>(v2)] <= og.rank[static_cast<size_t>(e.dst)] &&
            !g.has_edge(v, e.letter, v2))
          return false;
  return true;
}

Graph random_graph(Rng& rng, int n, int letters, int max_out) {
  Graph g;
  std::vector<std::string> syms;
  for (int c = 0; c < letters; ++c) syms.push_back(std::string(1, static_cast<char>('a' + c)));
  g.alphabet = Alphabet::symbols(syms);
  g.n = n;
  for (int v = 0; v < n; ++v) {
    int deg = rng.range(1, max_out);
    for (int i = 0; i < deg; ++i)
      g.edges.push_back(Edge{v, rng.range(0, letters - 1), rng.range(0, n - 1)});
  }
  g.normalize();
  return g;
}

// Exhaustive simple-cycle counter by brute-force DFS over edge sequences,
// written independently of enumerate_lassos.
int count_simple_cycles(const Graph& g, int maxlen) {
  int count = 0;
  std::vector<Edge> path;
  std::vector<bool> used(static_cast<size_t>(g.n), false);
  std::function<void(int, int)> go = [&](int root, int at) {
    for (const Edge& e : g.edges) {
      if (e.src != at) continue;
      if (e.dst == root) {
        ++count;
        continue;
      }
      if (static_cast<int>(path.size()) + 1 >= maxlen) continue;
      if (e.dst < root || used[static_cast<size_t>(e.dst)]) continue;
      used[static_cast<size_t>(e.dst)] = true;
      path.push_back(e);
      go(root, e.dst);
      path.pop_back();
      used[static_cast<size_t>(e.dst)] = false;
    }
  };
  for (int root = 0; root < g.n && maxlen >= 1; ++root) {
    used.assign(static_cast<size_t>(g.n), false);
    used[static_cast<size_t>(root)] = true;
    go(root, root);
  }
  return count;
}

}  // namespace

TEST_CASE("validate_graph accepts the smallest sinkless graph") {
  CHECK(validate_graph(self_loop()).ok());
}

TEST_CASE("validate_graph reports sinks") {
  Graph g = make_graph(Alphabet::symbols({"a"}), 2, {Edge{0, 0, 1}});
  GraphReport r = validate_graph(g);
  CHECK_FALSE(r.ok());
  REQUIRE(r.sinks.size() == 1);
  CHECK(r.sinks[0] == 1);
}

TEST_CASE("validate_graph reports out-of-alphabet letters") {
  Graph g;
  g.alphabet = Alphabet::symbols({"a"});
  g.n = 1;
  g.edges = {Edge{0, 3, 0}};
  GraphReport r = validate_graph(g);
  CHECK_FALSE(r.ok());
  CHECK(r.bad_letters.size() == 1);
}

TEST_CASE("check_monotone: downward edge over a two-vertex order is fine") {
  Graph g = make_graph(Alphabet::symbols({"a"}), 2, {Edge{1, 0, 0}, Edge{0, 0, 0}});
  // rank(1) > rank(0); the only closure demand of 1 -a-> 0 is itself plus
  // edges from above 1 / to below 0, which is 1 -a-> 0 and 0-related ones.
  OrderedGraph og{g, {0, 1}};
  // 1 -a-> 0 demands nothing new except 1 -a-> 0; 0 -a-> 0 demands 1 -a-> 0.
  CHECK_FALSE(check_monotone(og).has_value());
}

TEST_CASE("check_monotone: upward edge demands the mirrored edge") {
  Graph g = make_graph(Alphabet::symbols({"a"}), 2, {Edge{0, 0, 1}, Edge{1, 0, 1}});
  OrderedGraph og{g, {0, 1}};
  auto cex = check_monotone(og);
  REQUIRE(cex.has_value());
  // The missing closure edge is 1 -a-> 0 (bigger source, smaller target).
  CHECK(cex->src == 1);
  CHECK(cex->dst == 0);
}

TEST_CASE("check_monotone agrees with an independent closure re-check") {
  Rng rng(20240601);
  int agreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(rng, rng.range(1, 4), rng.range(1, 2), 2);
    std::vector<int> rank(static_cast<size_t>(g.n));
    std::iota(rank.begin(), rank.end(), 0);
    for (int i = g.n - 1; i > 0; --i) std::swap(rank[static_cast<size_t>(i)], rank[rng.below(static_cast<std::uint64_t>(i + 1))]);
    OrderedGraph og{g, rank};
    bool lib = !check_monotone(og).has_value();
    bool naive = naive_monotone(og);
    CHECK(lib == naive);
    agreements += (lib == naive);
  }
  CHECK(agreements == 200);
}

TEST_CASE("monotone closure is idempotent and passes check_monotone") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, rng.range(1, 5), rng.range(1, 3), 2);
    std::vector<int> rank(static_cast<size_t>(g.n));
    std::iota(rank.begin(), rank.end(), 0);
    OrderedGraph closed = monotone_closure(OrderedGraph{g, rank});
    CHECK_FALSE(check_monotone(closed).has_value());
    OrderedGraph twice = monotone_closure(closed);
    CHECK(twice.graph == closed.graph);
  }
}

TEST_CASE("enumerate_lassos: single self-loop yields exactly one lasso") {
  auto ls = enumerate_lassos(self_loop(), 1);
  REQUIRE(ls.size() == 1);
  CHECK(ls[0].stem.empty());
  CHECK(ls[0].cycle.size() == 1);
}

TEST_CASE("enumerate_lassos finds the two-cycle") {
  Graph g = make_graph(Alphabet::symbols({"a", "b"}), 2, {Edge{0, 0, 1}, Edge{1, 1, 0}});
  auto ls = enumerate_lassos(g, 2);
  bool found = false;
  for (const Lasso& l : ls)
    if (l.cycle.size() == 2) found = true;
  CHECK(found);
}

TEST_CASE("enumerate_lassos count matches a brute-force cycle enumerator") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(rng, 4, 2, 2);
    auto ls = enumerate_lassos(g, 3);
    CHECK(static_cast<int>(ls.size()) == count_simple_cycles(g, 3));
  }
}

TEST_CASE("every enumerated lasso replays edge-by-edge") {
  Rng rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, rng.range(2, 5), 2, 3);
    for (const Lasso& l : enumerate_lassos(g, g.n)) CHECK(l.replays_in(g));
  }
}

TEST_CASE("random lassos replay as well") {
  Rng rng(555);
  Graph g = random_graph(rng, 5, 2, 3);
  for (int i = 0; i < 50; ++i) {
    Lasso l = random_lasso(g, rng, rng.range(0, 4));
    CHECK(l.replays_in(g));
  }
}

TEST_CASE("unfold_tree: self-loop unfolds to a path") {
  UnfoldedTree t = unfold_tree(self_loop(), 0, 2, 0);
  CHECK(t.tree.n == 3);
  CHECK(t.padding.size() == 1);
}

TEST_CASE("unfold_tree: branching bound") {
  Graph g = make_graph(Alphabet::symbols({"a", "b"}), 1, {Edge{0, 0, 0}, Edge{0, 1, 0}});
  UnfoldedTree t = unfold_tree(g, 0, 3, 0);
  CHECK(t.tree.n <= 15);
}

TEST_CASE("unfolding projects back onto its graph away from the padding") {
  Rng rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(rng, rng.range(1, 4), 2, 2);
    UnfoldedTree t = unfold_tree(g, 0, 3, 0);
    Graph no_pad = t.tree;
    no_pad.edges.clear();
    for (const Edge& e : t.tree.edges) {
      bool pad = false;
      for (const Edge& p : t.padding) pad = pad || (p == e);
      if (!pad) no_pad.edges.push_back(e);
    }
    no_pad.normalize();
    CHECK_FALSE(morphism_violation(no_pad, g, t.projection()).has_value());
  }
}
