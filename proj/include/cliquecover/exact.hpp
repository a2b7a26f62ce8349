#pragma once

#include <stdexcept>
#include <string>

#include "cliquecover/certificate.hpp"
#include "cliquecover/graph.hpp"

namespace cliquecover {

struct ExactOptions {
  long long node_limit = 10'000'000;  // branch-and-bound nodes
  long long universe_cap = 2'000'000; // admissible number of t-cliques
};

struct ExactResult {
  long long size = 0;
  CoverCertificate cert;
  long long nodes = 0;
};

struct BudgetExceededError : std::runtime_error {
  long long node_limit;
  long long best_upper_bound;  // size of the best cover found, -1 if none
  BudgetExceededError(long long limit, long long best)
      : std::runtime_error(
            "node budget of " + std::to_string(limit) + " exceeded; best known cover size " +
            (best >= 0 ? std::to_string(best) : std::string("unknown"))),
        node_limit(limit),
        best_upper_bound(best) {}
};

// Minimum number of cliques covering every t-clique of g, with an optimal
// certificate.  Candidates are the inclusion-maximal cliques of size >= t.
// Branches on the uncovered t-clique with the fewest covering candidates,
// prunes with a greedy packing lower bound, and throws BudgetExceededError
// when the node budget runs out.
ExactResult exact_min_cover(const Graph& g, int t, const ExactOptions& opt = {});

// Size of a greedy family of t-cliques no two of which lie in a common
// candidate clique; a lower bound for the minimum cover size.
long long cover_lower_bound(const Graph& g, int t);

}  // namespace cliquecover
