#pragma once

#include <functional>
#include <vector>

#include "cliquecover/graph.hpp"

namespace cliquecover {

// Number of t-vertex cliques; t >= 1. Counts within `within` when given.
long long count_cliques(const Graph& g, int t);
long long count_cliques_in(const Graph& g, int t, const VertexSet& within);

// All t-cliques as sorted vertex vectors, in lexicographic order.
std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int t);

// Visit t-cliques in lexicographic order; return false from the callback to
// stop early.
void for_each_clique(const Graph& g, int t,
                     const std::function<bool(const std::vector<int>&)>& visit);

// Clique number (0 for an empty candidate set).
int clique_number(const Graph& g);
int clique_number_in(const Graph& g, const VertexSet& within);

// Lexicographically smallest maximum clique (sorted vertex vector).
std::vector<int> max_clique(const Graph& g);
std::vector<int> max_clique_in(const Graph& g, const VertexSet& within);

// Members of u_set adjacent to every vertex of w; w empty returns u_set.
VertexSet common_neighbors_in(const Graph& g, const VertexSet& u_set,
                              const std::vector<int>& w);

// w together with the members of u_set adjacent to all of w, sorted.
// When u_set spans a clique and w is a clique, the result is a clique.
std::vector<int> clique_closure(const Graph& g, const VertexSet& u_set,
                                const std::vector<int>& w);

// True iff g is (isomorphic to) the balanced complete multipartite graph on
// t parts: complement components are cliques with sizes differing by <= 1,
// t of them (fewer only in the complete-graph case n < t).
bool is_turan(const Graph& g, int t);

// Inclusion-maximal cliques of size >= min_size, sorted lexicographically.
std::vector<std::vector<int>> maximal_cliques(const Graph& g, int min_size);

}  // namespace cliquecover
