#include <doctest.h>

#include "cliquecover/cliques.hpp"
#include "cliquecover/partition.hpp"
#include "cliquecover/random.hpp"

using namespace cliquecover;

TEST_CASE("greedy partition peels maximum cliques in order") {
  CliquePartition p = greedy_partition(turan_graph(12, 4));
  CHECK(p.sizes() == std::vector<int>{4, 4, 4});
  CHECK(p.parts[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(p.parts[1] == std::vector<int>{4, 5, 6, 7});
  CHECK(p.parts[2] == std::vector<int>{8, 9, 10, 11});
  CHECK(verify_partition(turan_graph(12, 4), p).ok);
}

TEST_CASE("greedy partition of a five-cycle") {
  Graph c5(5);
  for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  CliquePartition p = greedy_partition(c5);
  CHECK(p.sizes() == std::vector<int>{2, 2, 1});
  CHECK(verify_partition(c5, p).ok);
}

TEST_CASE("partition checks reject structural lies") {
  Graph k4 = turan_graph(4, 4);

  // Two edges do partition V(K4) into cliques, but neither is maximum.
  CliquePartition split;
  split.parts = {{0, 1}, {2, 3}};
  PartitionCheck bad = verify_partition(k4, split);
  CHECK_FALSE(bad.ok);
  CHECK(bad.message.find("maximum") != std::string::npos);

  CliquePartition good;
  good.parts = {{0, 1, 2, 3}};
  CHECK(verify_partition(k4, good).ok);

  // Not a partition: a vertex missing.
  CliquePartition missing;
  missing.parts = {{0, 1, 2}};
  CHECK_FALSE(verify_partition(k4, missing).ok);

  // Not a clique.
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CliquePartition notclique;
  notclique.parts = {{0, 1, 2}};
  CHECK_FALSE(verify_partition(path, notclique).ok);

  // Sizes must be non-increasing.
  Graph two(5);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  two.add_edge(2, 4);
  two.add_edge(3, 4);
  CliquePartition increasing;
  increasing.parts = {{0, 1}, {2, 3, 4}};
  CHECK_FALSE(verify_partition(two, increasing).ok);
}

TEST_CASE("every vertex of a later part misses a neighbor in earlier parts") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 39);
    Graph g = random_graph(n, pick_density(rng), rng);
    CliquePartition p = greedy_partition(g);
    PartitionCheck check = verify_partition(g, p);
    INFO("n=", n, " trial=", trial, ": ", check.message);
    CHECK(check.ok);

    // Direct non-neighbor check, independent of verify_partition.
    for (size_t j = 1; j < p.parts.size(); ++j)
      for (size_t i = 0; i < j; ++i)
        for (int v : p.parts[j]) {
          bool misses = false;
          for (int u : p.parts[i])
            if (!g.adjacent(u, v)) misses = true;
          CHECK(misses);
        }

    // Part count bound: p <= n - min degree.
    CHECK(static_cast<int>(p.parts.size()) <= n - g.min_degree());
  }
}

TEST_CASE("exhaustive partition invariants on all small graphs") {
  for (int n = 1; n <= 5; ++n) {
    unsigned long long total = 1ull << (n * (n - 1) / 2);
    for (unsigned long long mask = 0; mask < total; ++mask) {
      Graph g = graph_from_mask(n, mask);
      CliquePartition p = greedy_partition(g);
      PartitionCheck check = verify_partition(g, p);
      INFO("n=", n, " mask=", mask, ": ", check.message);
      REQUIRE(check.ok);
    }
  }
}
