#include "cliquecover/exact.hpp"

#include <algorithm>

#include "cliquecover/cliques.hpp"

namespace cliquecover {

namespace {

// Set-cover view: universe = t-cliques (lexicographic), candidates =
// inclusion-maximal cliques of size >= t (lexicographic).
struct CoverInstance {
  int universe = 0;
  std::vector<std::vector<int>> candidates;
  std::vector<VertexSet> covers;      // candidate -> universe bitset
  std::vector<std::vector<int>> cand_of;  // element -> candidate indices
  std::vector<VertexSet> cand_mask;   // element -> candidate bitset

  CoverInstance(const Graph& g, int t, const std::vector<std::vector<int>>& elements) {
    universe = static_cast<int>(elements.size());
    candidates = maximal_cliques(g, t);
    int c = static_cast<int>(candidates.size());
    std::vector<VertexSet> cand_sets;
    cand_sets.reserve(c);
    for (const auto& cand : candidates) {
      VertexSet s(g.size());
      for (int v : cand) s.add(v);
      cand_sets.push_back(std::move(s));
    }
    covers.assign(c, VertexSet(universe));
    cand_of.assign(universe, {});
    cand_mask.assign(universe, VertexSet(c));
    for (int e = 0; e < universe; ++e) {
      for (int i = 0; i < c; ++i) {
        bool inside = true;
        for (int v : elements[e])
          if (!cand_sets[i].contains(v)) {
            inside = false;
            break;
          }
        if (inside) {
          covers[i].add(e);
          cand_of[e].push_back(i);
          cand_mask[e].add(i);
        }
      }
    }
  }

  // Greedy family of elements with pairwise disjoint candidate sets.
  long long packing_bound(const VertexSet& covered) const {
    VertexSet used(static_cast<int>(candidates.size()));
    long long count = 0;
    for (int e = 0; e < universe; ++e) {
      if (covered.contains(e)) continue;
      if (!cand_mask[e].intersects(used)) {
        ++count;
        used |= cand_mask[e];
      }
    }
    return count;
  }

  // Greedy cover: always the candidate covering the most uncovered elements.
  std::vector<int> greedy_cover() const {
    std::vector<int> chosen;
    VertexSet covered(universe);
    while (covered.count() < universe) {
      int best = -1, best_gain = -1;
      for (size_t i = 0; i < candidates.size(); ++i) {
        VertexSet gain = covers[i];
        gain -= covered;
        int value = gain.count();
        if (value > best_gain) {
          best_gain = value;
          best = static_cast<int>(i);
        }
      }
      chosen.push_back(best);
      covered |= covers[best];
    }
    return chosen;
  }
};

struct Search {
  const CoverInstance& inst;
  long long node_limit;
  long long nodes = 0;
  long long best_size;
  std::vector<int> best;
  std::vector<int> chosen;

  Search(const CoverInstance& inst, long long limit, std::vector<int> incumbent)
      : inst(inst), node_limit(limit), best_size(static_cast<long long>(incumbent.size())),
        best(std::move(incumbent)) {}

  void run(VertexSet& covered) {
    if (++nodes > node_limit) throw BudgetExceededError(node_limit, best_size);
    // Uncovered element with the fewest covering candidates.
    int pick = -1;
    size_t fewest = static_cast<size_t>(-1);
    for (int e = 0; e < inst.universe; ++e) {
      if (covered.contains(e)) continue;
      if (inst.cand_of[e].size() < fewest) {
        fewest = inst.cand_of[e].size();
        pick = e;
      }
    }
    if (pick == -1) {
      if (static_cast<long long>(chosen.size()) < best_size) {
        best_size = static_cast<long long>(chosen.size());
        best = chosen;
      }
      return;
    }
    if (static_cast<long long>(chosen.size()) + inst.packing_bound(covered) >= best_size) return;
    for (int c : inst.cand_of[pick]) {
      VertexSet next = covered;
      next |= inst.covers[c];
      chosen.push_back(c);
      run(next);
      chosen.pop_back();
    }
  }
};

}  // namespace

ExactResult exact_min_cover(const Graph& g, int t, const ExactOptions& opt) {
  if (t < 2) throw std::invalid_argument("exact_min_cover: t must be at least 2");
  std::vector<std::vector<int>> elements;
  bool too_big = false;
  for_each_clique(g, t, [&](const std::vector<int>& c) {
    elements.push_back(c);
    if (static_cast<long long>(elements.size()) > opt.universe_cap) {
      too_big = true;
      return false;
    }
    return true;
  });
  if (too_big)
    throw std::invalid_argument("exact_min_cover: more than " +
                                std::to_string(opt.universe_cap) + " cliques of size " +
                                std::to_string(t));
  ExactResult result;
  result.cert.t = t;
  result.cert.n = g.size();
  if (elements.empty()) return result;

  CoverInstance inst(g, t, elements);
  Search search(inst, opt.node_limit, inst.greedy_cover());
  VertexSet covered(inst.universe);
  search.run(covered);

  std::sort(search.best.begin(), search.best.end());
  result.size = static_cast<long long>(search.best.size());
  result.nodes = search.nodes;
  for (int c : search.best) {
    result.cert.cliques.push_back(inst.candidates[c]);
    result.cert.provenance.push_back(Provenance::exact);
  }
  return result;
}

long long cover_lower_bound(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("cover_lower_bound: t must be at least 2");
  std::vector<std::vector<int>> elements = enumerate_cliques(g, t);
  if (elements.empty()) return 0;
  CoverInstance inst(g, t, elements);
  return inst.packing_bound(VertexSet(inst.universe));
}

}  // namespace cliquecover
