#pragma once

#include <random>

#include "cliquecover/graph.hpp"

namespace cliquecover {

using Rng = std::mt19937_64;

// Independent edges with probability p, decided by a fixed 53-bit draw per
// pair in lexicographic order so corpora are reproducible from the seed alone.
Graph random_graph(int n, double p, Rng& rng);

// Deletes one random edge of some smallest-index (max_omega+1)-clique until
// the clique number is at most max_omega.  Deterministic given the rng state.
Graph cap_clique_number(Graph g, int max_omega, Rng& rng);

// The edge densities sampled by the random sweep corpus.
double pick_density(Rng& rng);

// Graph whose edge set is the given bitmask over the C(n,2) vertex pairs in
// lexicographic order ((0,1),(0,2),...,(n-2,n-1)); used by exhaustive sweeps.
Graph graph_from_mask(int n, unsigned long long mask);

}  // namespace cliquecover
