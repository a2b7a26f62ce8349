#include "cliquecover/random.hpp"

#include "cliquecover/cliques.hpp"

namespace cliquecover {

Graph random_graph(int n, double p, Rng& rng) {
  Graph g(n);
  // Threshold on the top 53 bits: identical draws on every platform, unlike
  // the unspecified std::bernoulli_distribution.
  const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);  // 2^53
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((rng() >> 11) < threshold) g.add_edge(u, v);
  return g;
}

Graph cap_clique_number(Graph g, int max_omega, Rng& rng) {
  while (true) {
    std::vector<int> witness;
    for_each_clique(g, max_omega + 1, [&](const std::vector<int>& clique) {
      witness = clique;
      return false;
    });
    if (witness.empty()) return g;
    const auto pairs = static_cast<std::uint64_t>(witness.size()) * (witness.size() - 1) / 2;
    auto pick = rng() % pairs;
    for (size_t x = 0; x < witness.size(); ++x)
      for (size_t y = x + 1; y < witness.size(); ++y)
        if (pick-- == 0) {
          g.remove_edge(witness[x], witness[y]);
          x = witness.size();
          break;
        }
  }
}

double pick_density(Rng& rng) {
  static const double densities[] = {0.3, 0.5, 0.7, 0.9};
  return densities[rng() % 4];
}

Graph graph_from_mask(int n, unsigned long long mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1ull) g.add_edge(u, v);
  return g;
}

}  // namespace cliquecover
