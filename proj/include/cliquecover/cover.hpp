#pragma once

#include <array>
#include <vector>

#include "cliquecover/certificate.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/partition.hpp"
#include "cliquecover/sequence.hpp"

namespace cliquecover {

struct Build3CoverResult {
  CoverCertificate cert;    // t = 3, carries the partition
  CliquePartition partition;
  GreedySequence sequence;
  FValue f;                 // certificate size is always <= f.f
};

// Constructive 3-clique cover of a K5-free graph from its greedy partition:
// the parts of size >= 3 (C1), single-seed and same-part-pair closures (C2),
// and cross-part-pair closures over part triples (C3); sets smaller than 3
// are dropped and duplicates removed.  Validates before returning.
Build3CoverResult build_3cover(const Graph& g);

// Hypergraph on the size-4 parts 0..a-1 of a greedy partition of a K5-free
// graph: {i,j,k} is an edge iff the three parts induce a subgraph with 54
// edges (the K5-free maximum on 12 vertices).
struct TripleHypergraph {
  int a = 0;
  std::vector<std::array<int, 3>> edges;  // sorted triples, lexicographic

  bool has_edge(int i, int j, int k) const;
};

TripleHypergraph build_triple_hypergraph(const Graph& g, const CliquePartition& p);

struct K4Triples {
  // 4-sets of hypergraph vertices spanning all four possible edges.
  std::vector<std::array<int, 4>> complete;
  // 4-sets spanning exactly three edges; always empty for greedy partitions
  // of K5-free graphs, reported so a violation is visible.
  std::vector<std::array<int, 4>> violations;
};

K4Triples find_k4_triples(const TripleHypergraph& h);

// Improves a 3-cover without increasing its size:
//  (a) a triple of size-4 parts that is not a hypergraph edge has its
//      cross-part closures rebuilt from the pair with the fewest cross edges
//      (at most 11 sets);
//  (b) a greedy maximal family of complete 4-sets, pairwise sharing at most
//      two parts, has each 4-set's 48 closures replaced by the 24 cliques
//      meeting all four parts once.
// Validates before returning.  When deduplication against the shared C1/C2
// sets would leave the rebuilt cover larger, the input is returned unchanged.
Build3CoverResult refine_3cover(const Graph& g, const Build3CoverResult& base);

// Constructive 4-clique cover of an arbitrary graph:
//   n <= 5: exact solve;  clique number <= 3: empty;  clique number 4: all
//   4-cliques;  clique number >= 6: peel the lexicographically smallest
//   maximum clique C and extend the cover of g - C by C and the closures of
//   the vertices, edges and triangles outside C;  clique number 5: remove a
//   minimum-degree vertex v, cover g - v recursively, and lift a refined
//   3-cover of the neighborhood of v by v.
CoverCertificate build_4cover(const Graph& g);

}  // namespace cliquecover
