#include <doctest.h>

#include "cliquecover/cliques.hpp"
#include "cliquecover/exact.hpp"
#include "cliquecover/random.hpp"

using namespace cliquecover;

namespace {

// Dumb oracle: smallest subset of the maximal cliques covering every
// t-clique, found by scanning the whole candidate powerset.
long long naive_min_cover(const Graph& g, int t) {
  auto elements = enumerate_cliques(g, t);
  if (elements.empty()) return 0;
  auto candidates = maximal_cliques(g, t);
  const int c = static_cast<int>(candidates.size());
  REQUIRE(c <= 20);
  std::vector<unsigned> covers(c, 0);
  for (int i = 0; i < c; ++i) {
    VertexSet s(g.size());
    for (int v : candidates[i]) s.add(v);
    for (size_t e = 0; e < elements.size(); ++e) {
      bool inside = true;
      for (int v : elements[e])
        if (!s.contains(v)) inside = false;
      if (inside) covers[i] |= 1u << e;
    }
  }
  REQUIRE(elements.size() <= 31);
  const unsigned full = (1u << elements.size()) - 1;
  int best = c;
  for (unsigned pick = 0; pick < (1u << c); ++pick) {
    unsigned covered = 0;
    int size = __builtin_popcount(pick);
    if (size >= best) continue;
    for (int i = 0; i < c; ++i)
      if ((pick >> i) & 1u) covered |= covers[i];
    if (covered == full) best = size;
  }
  return best;
}

}  // namespace

TEST_CASE("minimum covers of canonical graphs") {
  Graph k5 = turan_graph(5, 5);
  ExactResult r = exact_min_cover(k5, 4);
  CHECK(r.size == 1);
  CHECK(r.cert.cliques == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});

  CHECK(exact_min_cover(turan_graph(6, 4), 4).size == 4);
  CHECK(exact_min_cover(turan_graph(4, 2), 2).size == 4);
  CHECK(exact_min_cover(turan_graph(9, 3), 3).size == 27);

  // No 4-clique at all: the empty cover.
  ExactResult empty = exact_min_cover(turan_graph(9, 3), 4);
  CHECK(empty.size == 0);
  CHECK(empty.cert.cliques.empty());
  CHECK(validate_cover(turan_graph(9, 3), empty.cert).ok);

  CHECK_THROWS_AS(exact_min_cover(k5, 1), std::invalid_argument);
}

TEST_CASE("solver certificates validate and match the naive oracle") {
  for (int n = 2; n <= 5; ++n) {
    unsigned long long total = 1ull << (n * (n - 1) / 2);
    for (unsigned long long mask = 0; mask < total; ++mask) {
      Graph g = graph_from_mask(n, mask);
      for (int t = 2; t <= 4; ++t) {
        ExactResult r = exact_min_cover(g, t);
        INFO("n=", n, " mask=", mask, " t=", t);
        REQUIRE(r.size == naive_min_cover(g, t));
        REQUIRE(validate_cover(g, r.cert).ok);
        REQUIRE(cover_lower_bound(g, t) <= r.size);
      }
    }
  }
}

TEST_CASE("solver matches the naive oracle on sampled six-vertex graphs") {
  Rng rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    unsigned long long mask = rng() & ((1ull << 15) - 1);
    Graph g = graph_from_mask(6, mask);
    for (int t = 2; t <= 4; ++t) {
      ExactResult r = exact_min_cover(g, t);
      INFO("mask=", mask, " t=", t);
      REQUIRE(r.size == naive_min_cover(g, t));
      REQUIRE(validate_cover(g, r.cert).ok);
    }
  }
}

TEST_CASE("node budget interrupts the search with the incumbent attached") {
  // The zero budget trips on the first node of any nonempty instance.
  ExactOptions zero;
  zero.node_limit = 0;
  try {
    exact_min_cover(turan_graph(8, 4), 4, zero);
    FAIL("expected the budget to trip");
  } catch (const BudgetExceededError& e) {
    CHECK(e.node_limit == 0);
    CHECK(e.best_upper_bound >= 16);  // greedy incumbent covers everything
  }

  // K4 minus an edge: the packing bound is 1 but the optimum is 2, so the
  // search must branch and a budget of one node trips mid-search.
  Graph diamond(4);
  for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}) diamond.add_edge(u, v);
  REQUIRE(exact_min_cover(diamond, 2).nodes > 1);
  ExactOptions one;
  one.node_limit = 1;
  CHECK_THROWS_AS(exact_min_cover(diamond, 2, one), BudgetExceededError);

  // The same situation must arise somewhere in a random corpus; find an
  // instance whose search branches and rerun it with a budget one short.
  Rng rng(17);
  bool found = false;
  for (int trial = 0; trial < 3000 && !found; ++trial) {
    unsigned long long mask = rng() & ((1ull << 15) - 1);
    Graph g = graph_from_mask(6, mask);
    for (int t = 2; t <= 3 && !found; ++t) {
      ExactResult r = exact_min_cover(g, t);
      if (r.nodes <= 1) continue;
      found = true;
      ExactOptions tight;
      tight.node_limit = r.nodes - 1;
      try {
        exact_min_cover(g, t, tight);
        FAIL("expected the budget to trip at ", r.nodes - 1, " nodes");
      } catch (const BudgetExceededError& e) {
        CHECK(e.best_upper_bound >= r.size);
      }
    }
  }
  CHECK(found);
}

TEST_CASE("universe cap rejects oversized instances") {
  ExactOptions tiny;
  tiny.universe_cap = 10;
  CHECK_THROWS_AS(exact_min_cover(turan_graph(12, 4), 4, tiny), std::invalid_argument);
}

TEST_CASE("packing lower bound on the balanced 4-partite graph") {
  // Every 4-clique of T(8,4) is its own maximal clique: the bound is exact.
  CHECK(cover_lower_bound(turan_graph(8, 4), 4) == 16);
  CHECK(cover_lower_bound(turan_graph(9, 3), 3) == 27);
  CHECK(cover_lower_bound(Graph(3), 2) == 0);
}
