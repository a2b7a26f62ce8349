#pragma once

#include <string>
#include <vector>

#include "cliquecover/graph.hpp"

namespace cliquecover {

// Partition of the vertex set into cliques, ordered as produced by the greedy
// construction (sizes non-increasing, each part sorted ascending).
struct CliquePartition {
  std::vector<std::vector<int>> parts;

  int part_count() const { return static_cast<int>(parts.size()); }
  std::vector<int> sizes() const;
};

// Repeatedly removes the lexicographically smallest maximum clique of the
// residual graph until no vertex remains.
CliquePartition greedy_partition(const Graph& g);

struct PartitionCheck {
  bool ok = true;
  std::string message;  // first violated condition, with witnesses
};

// Checks, in order: parts partition V(g); each part is a clique; sizes are
// non-increasing; each part is a maximum clique of its residual graph; every
// vertex of a later part has a non-neighbor in each earlier part; the union
// of parts of size <= 2 induces a triangle-free graph and the union of
// singleton parts induces no edge; part_count <= n - min_degree.
PartitionCheck verify_partition(const Graph& g, const CliquePartition& p);

}  // namespace cliquecover
