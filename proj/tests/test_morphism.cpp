#include <catch2/catch_amalgamated.hpp>

#include "poslab/graph.hpp"
#include "poslab/morphism_search.hpp"
#include "poslab/rng.hpp"

using namespace poslab;

namespace {

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

}  // namespace

TEST_CASE("find_morphism maps a self-loop onto a matching loop") {
  Graph g = make_graph(Alphabet::symbols({"a"}), 1, {Edge{0, 0, 0}});
  Graph h = make_graph(Alphabet::symbols({"a", "b"}), 2,
                       {Edge{0, 1, 1}, Edge{1, 0, 1}, Edge{1, 1, 0}});
  auto m = find_morphism(g, h);
  REQUIRE(m.has_value());
  CHECK(m->map[0] == 1);  // vertex 1 carries the a-self-loop
  CHECK(is_morphism(g, h, *m));
}

TEST_CASE("find_morphism fails when a letter has no home") {
  Graph g = make_graph(Alphabet::symbols({"a", "b"}), 1, {Edge{0, 0, 0}, Edge{0, 1, 0}});
  Graph h = make_graph(Alphabet::symbols({"a", "b"}), 1, {Edge{0, 0, 0}});
  CHECK_FALSE(find_morphism(g, h).has_value());
}

TEST_CASE("adding edges keeps the identity a morphism") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 4, 2, 2);
    Graph h = g;
    // grow h with extra random edges, like a saturation would
    for (int i = 0; i < 3; ++i)
      h.edges.push_back(Edge{rng.range(0, 3), rng.range(0, 1), rng.range(0, 3)});
    h.normalize();
    Morphism identity{{0, 1, 2, 3}};
    CHECK(is_morphism(g, h, identity));
    auto m = find_morphism(g, h);
    REQUIRE(m.has_value());
    CHECK(is_morphism(g, h, *m));
  }
}

TEST_CASE("find_morphism respects the node budget") {
  Rng rng(77);
  Graph g = random_graph(rng, 8, 1, 2);
  Graph h = random_graph(rng, 12, 1, 3);
  CHECK_THROWS_AS(find_morphism(g, h, 1), BudgetExceeded);
}

TEST_CASE("found morphisms are always valid") {
  Rng rng(4242);
  int found = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, rng.range(2, 4), 2, 2);
    Graph h = random_graph(rng, rng.range(2, 5), 2, 3);
    auto m = find_morphism(g, h);
    if (m) {
      ++found;
      CHECK(is_morphism(g, h, *m));
    }
  }
  CHECK(found > 0);
}
