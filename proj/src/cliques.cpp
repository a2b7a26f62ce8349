#include "cliquecover/cliques.hpp"

#include <algorithm>

namespace cliquecover {

namespace {

// Depth-indexed candidate sets, preallocated so the hot counting loops do not
// allocate per node.
struct CliqueCounter {
  const Graph& g;
  int t;
  long long count = 0;
  std::vector<VertexSet> level;

  CliqueCounter(const Graph& g, int t) : g(g), t(t), level(t + 1, VertexSet(g.size())) {}

  void run(const VertexSet& within) {
    if (t == 0) return;
    level[0] = within;
    descend(0);
  }

  void descend(int depth) {
    // depth vertices chosen so far, candidates in level[depth]
    if (depth == t - 1) {
      count += level[depth].count();
      return;
    }
    for (int v = level[depth].first(); v != -1; v = level[depth].next(v)) {
      level[depth + 1] = level[depth];
      level[depth + 1] &= g.neighbors(v);
      level[depth + 1].remove_upto(v);
      if (!level[depth + 1].empty()) descend(depth + 1);
    }
  }
};

}  // namespace

long long count_cliques_in(const Graph& g, int t, const VertexSet& within) {
  if (t < 1) throw std::invalid_argument("count_cliques: t must be at least 1");
  if (t > g.size()) return 0;
  CliqueCounter counter(g, t);
  counter.run(within);
  return counter.count;
}

long long count_cliques(const Graph& g, int t) {
  return count_cliques_in(g, t, g.vertex_set());
}

void for_each_clique(const Graph& g, int t,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  if (t < 1) throw std::invalid_argument("for_each_clique: t must be at least 1");
  if (t > g.size()) return;
  std::vector<int> chosen;
  chosen.reserve(t);
  std::vector<VertexSet> level(t, VertexSet(g.size()));
  level[0] = g.vertex_set();
  bool stop = false;
  auto descend = [&](auto&& self, int depth) -> void {
    for (int v = level[depth].first(); v != -1 && !stop; v = level[depth].next(v)) {
      chosen.push_back(v);
      if (depth == t - 1) {
        if (!visit(chosen)) stop = true;
      } else {
        level[depth + 1] = level[depth];
        level[depth + 1] &= g.neighbors(v);
        level[depth + 1].remove_upto(v);
        self(self, depth + 1);
      }
      chosen.pop_back();
    }
  };
  descend(descend, 0);
}

std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int t) {
  std::vector<std::vector<int>> out;
  for_each_clique(g, t, [&](const std::vector<int>& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

namespace {

// Greedy coloring of the candidate set; vertices returned in nondecreasing
// color order.  A clique inside P has at most max-color vertices.
struct ColorOrder {
  std::vector<int> order;
  std::vector<int> color;
};

ColorOrder greedy_color(const Graph& g, const VertexSet& p) {
  ColorOrder out;
  std::vector<VertexSet> classes;
  for (int v = p.first(); v != -1; v = p.next(v)) {
    bool placed = false;
    for (auto& cls : classes) {
      if (!cls.intersects(g.neighbors(v))) {
        cls.add(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      classes.emplace_back(g.size());
      classes.back().add(v);
    }
  }
  for (size_t c = 0; c < classes.size(); ++c)
    for (int v = classes[c].first(); v != -1; v = classes[c].next(v)) {
      out.order.push_back(v);
      out.color.push_back(static_cast<int>(c) + 1);
    }
  return out;
}

struct MaxCliqueSolver {
  const Graph& g;
  int best = 0;

  explicit MaxCliqueSolver(const Graph& g) : g(g) {}

  void expand(const VertexSet& p, int depth) {
    ColorOrder co = greedy_color(g, p);
    VertexSet cand = p;
    for (int i = static_cast<int>(co.order.size()) - 1; i >= 0; --i) {
      if (depth + co.color[i] <= best) return;
      int v = co.order[i];
      cand.remove(v);
      VertexSet next = cand;
      next &= g.neighbors(v);
      if (next.empty()) {
        if (depth + 1 > best) best = depth + 1;
      } else {
        expand(next, depth + 1);
      }
    }
  }
};

}  // namespace

int clique_number_in(const Graph& g, const VertexSet& within) {
  if (within.empty()) return 0;
  MaxCliqueSolver solver(g);
  solver.expand(within, 0);
  return solver.best;
}

int clique_number(const Graph& g) { return clique_number_in(g, g.vertex_set()); }

std::vector<int> max_clique_in(const Graph& g, const VertexSet& within) {
  std::vector<int> clique;
  int need = clique_number_in(g, within);
  VertexSet p = within;
  while (need > 0) {
    for (int v = p.first(); v != -1; v = p.next(v)) {
      VertexSet rest = p;
      rest &= g.neighbors(v);
      rest.remove_upto(v);
      if (clique_number_in(g, rest) == need - 1) {
        clique.push_back(v);
        p = rest;
        break;
      }
    }
    --need;
  }
  return clique;
}

std::vector<int> max_clique(const Graph& g) { return max_clique_in(g, g.vertex_set()); }

VertexSet common_neighbors_in(const Graph& g, const VertexSet& u_set,
                              const std::vector<int>& w) {
  VertexSet out = u_set;
  for (int x : w) {
    if (x < 0 || x >= g.size())
      throw std::invalid_argument("common_neighbors_in: vertex " + std::to_string(x) +
                                  " out of range");
    out &= g.neighbors(x);
  }
  return out;
}

std::vector<int> clique_closure(const Graph& g, const VertexSet& u_set,
                                const std::vector<int>& w) {
  VertexSet s = common_neighbors_in(g, u_set, w);
  for (int x : w) s.add(x);
  return s.to_vector();
}

bool is_turan(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("is_turan: t must be at least 1");
  Graph c = g.complement();
  // Collect connected components of the complement; each must be a clique.
  int n = g.size();
  std::vector<int> comp_sizes;
  VertexSet seen(n);
  for (int v = 0; v < n; ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp(n);
    comp.add(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(n);
      for (int u : frontier) {
        VertexSet nb = c.neighbors(u);
        nb -= comp;
        next |= nb;
      }
      comp |= next;
      frontier = next;
    }
    std::vector<int> verts = comp.to_vector();
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j)
        if (!c.adjacent(verts[i], verts[j])) return false;
    comp_sizes.push_back(static_cast<int>(verts.size()));
    seen |= comp;
  }
  int parts = static_cast<int>(comp_sizes.size());
  int lo = *std::min_element(comp_sizes.begin(), comp_sizes.end());
  int hi = *std::max_element(comp_sizes.begin(), comp_sizes.end());
  if (parts == t) return hi - lo <= 1;
  // Fewer components than parts is only balanced when the absent parts have
  // size zero, i.e. the graph is complete.
  return parts < t && hi == 1;
}

namespace {

struct BronKerbosch {
  const Graph& g;
  int min_size;
  std::vector<int> r;
  std::vector<std::vector<int>> out;

  BronKerbosch(const Graph& g, int min_size) : g(g), min_size(min_size) {}

  void run(VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      if (static_cast<int>(r.size()) >= min_size) {
        std::vector<int> clique = r;
        std::sort(clique.begin(), clique.end());
        out.push_back(std::move(clique));
      }
      return;
    }
    // Pivot on the vertex of P|X with the most neighbors in P.
    int pivot = -1, pivot_deg = -1;
    VertexSet both = p;
    both |= x;
    for (int u : both) {
      VertexSet t = p;
      t &= g.neighbors(u);
      int d = t.count();
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = u;
      }
    }
    VertexSet ext = p;
    ext -= g.neighbors(pivot);
    for (int v : ext) {
      r.push_back(v);
      VertexSet np = p;
      np &= g.neighbors(v);
      VertexSet nx = x;
      nx &= g.neighbors(v);
      run(np, nx);
      r.pop_back();
      p.remove(v);
      x.add(v);
    }
  }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g, int min_size) {
  BronKerbosch bk(g, min_size);
  bk.run(g.vertex_set(), VertexSet(g.size()));
  std::sort(bk.out.begin(), bk.out.end());
  return bk.out;
}

}  // namespace cliquecover
