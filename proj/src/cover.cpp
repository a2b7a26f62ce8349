#include "cliquecover/cover.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cliquecover/cliques.hpp"
#include "cliquecover/exact.hpp"

namespace cliquecover {

namespace {

// Accumulates cover members, dropping sets below the threshold and duplicates.
struct SetAccumulator {
  int threshold;
  std::vector<std::vector<int>> cliques;
  std::vector<Provenance> tags;
  std::set<std::vector<int>> seen;

  explicit SetAccumulator(int t) : threshold(t) {}

  void add(std::vector<int> clique, Provenance tag) {
    if (static_cast<int>(clique.size()) < threshold) return;
    if (!seen.insert(clique).second) return;
    cliques.push_back(std::move(clique));
    tags.push_back(tag);
  }
};

std::vector<VertexSet> part_bitsets(const Graph& g, const CliquePartition& p) {
  std::vector<VertexSet> out;
  out.reserve(p.parts.size());
  for (const auto& part : p.parts) {
    VertexSet s(g.size());
    for (int v : part) s.add(v);
    out.push_back(std::move(s));
  }
  return out;
}

// The parts of size >= 3 and the one- and two-seed closures shared by the
// plain and the refined 3-cover.
void emit_c1_c2(const Graph& g, const CliquePartition& p, const GreedySequence& seq,
                SetAccumulator& out) {
  const auto& parts = p.parts;
  const int count = p.part_count();
  const int a = seq.count_at_least(4);
  const int b = seq.count_at_least(3);
  std::vector<VertexSet> psets = part_bitsets(g, p);

  for (int i = 0; i < b; ++i) out.add(parts[i], Provenance::C1);

  // Single seed from a later part, closure in an earlier part of size >= 3.
  for (int j = 1; j < count; ++j)
    for (int i = 0; i < std::min(j, b); ++i)
      for (int v : parts[j]) out.add(clique_closure(g, psets[i], {v}), Provenance::C2);

  // Single seed from an earlier part, closure in a later part of size 4.
  for (int j = 1; j < a; ++j)
    for (int i = 0; i < j; ++i)
      for (int v : parts[i]) out.add(clique_closure(g, psets[j], {v}), Provenance::C2);

  // Same-part pair from a part after the size-4 prefix, closure in an earlier
  // part of size >= 3.
  for (int j = a; j < count; ++j)
    for (int i = 0; i < std::min(j, b); ++i)
      for (size_t x = 0; x < parts[j].size(); ++x)
        for (size_t y = x + 1; y < parts[j].size(); ++y)
          out.add(clique_closure(g, psets[i], {parts[j][x], parts[j][y]}), Provenance::C2);
}

// Cross-pair closures of one part triple: pairs u in parts[mid], v in
// parts[high] joined by an edge, closed into parts[low].
void emit_cross_closures(const Graph& g, const std::vector<VertexSet>& psets,
                         const std::vector<std::vector<int>>& parts, int low, int mid, int high,
                         Provenance tag, SetAccumulator& out) {
  for (int u : parts[mid])
    for (int v : parts[high])
      if (g.adjacent(u, v)) out.add(clique_closure(g, psets[low], {u, v}), tag);
}

long long cross_edge_count(const Graph& g, const std::vector<std::vector<int>>& parts, int x,
                           int y) {
  long long count = 0;
  for (int u : parts[x])
    for (int v : parts[y])
      if (g.adjacent(u, v)) ++count;
  return count;
}

CoverCertificate finish_certificate(const Graph& g, int t, SetAccumulator&& out,
                                    const CliquePartition* partition) {
  CoverCertificate cert;
  cert.t = t;
  cert.n = g.size();
  cert.cliques = std::move(out.cliques);
  cert.provenance = std::move(out.tags);
  if (partition) cert.partition = partition->parts;
  ValidationResult check = validate_cover(g, cert);
  if (!check.ok) throw std::logic_error("constructed cover failed validation: " + check.message);
  return cert;
}

}  // namespace

Build3CoverResult build_3cover(const Graph& g) {
  if (clique_number(g) > 4)
    throw std::invalid_argument("build_3cover requires a graph with no 5-clique");
  CliquePartition partition = greedy_partition(g);
  GreedySequence seq = sequence_of(partition);
  FValue f = value_f(seq);

  SetAccumulator out(3);
  emit_c1_c2(g, partition, seq, out);
  const auto& parts = partition.parts;
  std::vector<VertexSet> psets = part_bitsets(g, partition);
  const int count = partition.part_count();
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      for (int k = j + 1; k < count; ++k)
        emit_cross_closures(g, psets, parts, i, j, k, Provenance::C3, out);

  Build3CoverResult result{finish_certificate(g, 3, std::move(out), &partition),
                           std::move(partition), std::move(seq), f};
  if (result.cert.size() > f.f)
    throw std::logic_error("3-cover certificate size " + std::to_string(result.cert.size()) +
                           " exceeds its budget f = " + std::to_string(f.f));
  return result;
}

bool TripleHypergraph::has_edge(int i, int j, int k) const {
  std::array<int, 3> key{i, j, k};
  std::sort(key.begin(), key.end());
  return std::binary_search(edges.begin(), edges.end(), key);
}

TripleHypergraph build_triple_hypergraph(const Graph& g, const CliquePartition& p) {
  TripleHypergraph h;
  for (const auto& part : p.parts)
    if (part.size() == 4) ++h.a;
  const auto& parts = p.parts;
  for (int i = 0; i < h.a; ++i)
    for (int j = i + 1; j < h.a; ++j)
      for (int k = j + 1; k < h.a; ++k) {
        std::vector<int> verts;
        verts.insert(verts.end(), parts[i].begin(), parts[i].end());
        verts.insert(verts.end(), parts[j].begin(), parts[j].end());
        verts.insert(verts.end(), parts[k].begin(), parts[k].end());
        long long edges = 0;
        for (size_t x = 0; x < verts.size(); ++x)
          for (size_t y = x + 1; y < verts.size(); ++y)
            if (g.adjacent(verts[x], verts[y])) ++edges;
        if (edges > 54)
          throw std::invalid_argument(
              "parts " + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
              " induce " + std::to_string(edges) + " edges; the graph has a 5-clique");
        if (edges == 54) h.edges.push_back({i, j, k});
      }
  return h;
}

K4Triples find_k4_triples(const TripleHypergraph& h) {
  K4Triples out;
  for (int w = 0; w < h.a; ++w)
    for (int x = w + 1; x < h.a; ++x)
      for (int y = x + 1; y < h.a; ++y)
        for (int z = y + 1; z < h.a; ++z) {
          int spanned = h.has_edge(w, x, y) + h.has_edge(w, x, z) + h.has_edge(w, y, z) +
                        h.has_edge(x, y, z);
          if (spanned == 4) out.complete.push_back({w, x, y, z});
          else if (spanned == 3) out.violations.push_back({w, x, y, z});
        }
  return out;
}

Build3CoverResult refine_3cover(const Graph& g, const Build3CoverResult& base) {
  const CliquePartition& partition = base.partition;
  const GreedySequence& seq = base.sequence;
  const auto& parts = partition.parts;
  std::vector<VertexSet> psets = part_bitsets(g, partition);
  const int count = partition.part_count();
  const int a = seq.count_at_least(4);

  TripleHypergraph hg = build_triple_hypergraph(g, partition);
  K4Triples k4 = find_k4_triples(hg);
  if (!k4.violations.empty()) {
    const auto& v = k4.violations.front();
    throw std::logic_error("part 4-set " + std::to_string(v[0]) + "," + std::to_string(v[1]) +
                           "," + std::to_string(v[2]) + "," + std::to_string(v[3]) +
                           " spans exactly three hypergraph edges");
  }
  // Greedy maximal family of complete 4-sets, pairwise sharing at most 2 parts.
  std::vector<std::array<int, 4>> family;
  for (const auto& cand : k4.complete) {
    bool fits = true;
    for (const auto& chosen : family) {
      int shared = 0;
      for (int p1 : cand)
        for (int p2 : chosen)
          if (p1 == p2) ++shared;
      if (shared > 2) {
        fits = false;
        break;
      }
    }
    if (fits) family.push_back(cand);
  }
  std::map<std::array<int, 3>, size_t> region_of;
  for (size_t r = 0; r < family.size(); ++r) {
    const auto& q = family[r];
    for (int drop = 0; drop < 4; ++drop) {
      std::array<int, 3> triple{};
      int at = 0;
      for (int pos = 0; pos < 4; ++pos)
        if (pos != drop) triple[at++] = q[pos];
      region_of[triple] = r;
    }
  }

  SetAccumulator out(3);
  emit_c1_c2(g, partition, seq, out);
  std::vector<bool> region_emitted(family.size(), false);
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      for (int k = j + 1; k < count; ++k) {
        auto region = region_of.find({i, j, k});
        if (region != region_of.end()) {
          size_t r = region->second;
          if (region_emitted[r]) continue;
          region_emitted[r] = true;
          // All 4-cliques meeting each of the four parts exactly once; the
          // region induces a balanced 4-partite graph, so there are 24.
          const auto& q = family[r];
          long long emitted = 0;
          for (int v0 : parts[q[0]])
            for (int v1 : parts[q[1]])
              for (int v2 : parts[q[2]])
                for (int v3 : parts[q[3]]) {
                  std::vector<int> clique{v0, v1, v2, v3};
                  bool ok = true;
                  for (size_t x = 0; x < 4 && ok; ++x)
                    for (size_t y = x + 1; y < 4; ++y)
                      if (!g.adjacent(clique[x], clique[y])) {
                        ok = false;
                        break;
                      }
                  if (!ok) continue;
                  std::sort(clique.begin(), clique.end());
                  out.add(std::move(clique), Provenance::refinement);
                  ++emitted;
                }
          if (emitted != 24)
            throw std::logic_error("complete part 4-set produced " + std::to_string(emitted) +
                                   " transversal 4-cliques instead of 24");
          continue;
        }
        if (k < a && !hg.has_edge(i, j, k)) {
          // Sparse triple: rebuild from the cross pair with the fewest edges,
          // preferring the default (mid, high) pair on ties.
          struct Choice { int low, mid, high; long long edges; };
          Choice options[3] = {{i, j, k, cross_edge_count(g, parts, j, k)},
                               {j, i, k, cross_edge_count(g, parts, i, k)},
                               {k, i, j, cross_edge_count(g, parts, i, j)}};
          Choice best = options[0];
          for (const auto& option : options)
            if (option.edges < best.edges) best = option;
          if (best.edges > 11)
            throw std::logic_error("sparse part triple has no cross pair with at most 11 edges");
          Provenance tag = (best.low == i) ? Provenance::C3 : Provenance::refinement;
          emit_cross_closures(g, psets, parts, best.low, best.mid, best.high, tag, out);
          continue;
        }
        emit_cross_closures(g, psets, parts, i, j, k, Provenance::C3, out);
      }

  Build3CoverResult result{finish_certificate(g, 3, std::move(out), &partition), partition, seq,
                           base.f};
  // Rebuilt members usually replace more than they add, but deduplication
  // against the shared C1/C2 sets can tip the balance the other way; keep the
  // base cover in that case so the result never grows.
  if (result.cert.size() > base.cert.size()) return base;
  return result;
}

namespace {

void lift(std::vector<std::vector<int>>& cliques, const std::vector<int>& to_parent) {
  for (auto& clique : cliques) {
    for (int& v : clique) v = to_parent[v];
    std::sort(clique.begin(), clique.end());
  }
}

// Cover of every 4-clique, over the host graph's vertex labels.
void cover4(const Graph& g, SetAccumulator& out) {
  if (g.size() <= 5) {
    ExactResult ex = exact_min_cover(g, 4);
    for (auto& clique : ex.cert.cliques) out.add(clique, Provenance::exact);
    return;
  }
  int omega = clique_number(g);
  if (omega <= 3) return;
  if (omega == 4) {
    for (auto& clique : enumerate_cliques(g, 4)) out.add(std::move(clique), Provenance::exact);
    return;
  }
  if (omega >= 6) {
    std::vector<int> peel = max_clique(g);
    VertexSet peel_set(g.size());
    for (int v : peel) peel_set.add(v);
    VertexSet rest_set = g.vertex_set();
    rest_set -= peel_set;
    if (rest_set.empty()) {
      out.add(peel, Provenance::peel);
      return;
    }
    Graph::Induced rest = g.induced(rest_set);

    SetAccumulator inner(4);
    cover4(rest.graph, inner);
    lift(inner.cliques, rest.to_parent);
    for (size_t i = 0; i < inner.cliques.size(); ++i)
      out.add(std::move(inner.cliques[i]), inner.tags[i]);

    out.add(peel, Provenance::peel);
    for (int v : rest_set) out.add(clique_closure(g, peel_set, {v}), Provenance::extension);
    for (auto [u, v] : rest.graph.edges())
      out.add(clique_closure(g, peel_set, {rest.to_parent[u], rest.to_parent[v]}),
              Provenance::extension);
    for_each_clique(rest.graph, 3, [&](const std::vector<int>& tri) {
      out.add(clique_closure(g, peel_set,
                             {rest.to_parent[tri[0]], rest.to_parent[tri[1]],
                              rest.to_parent[tri[2]]}),
              Provenance::extension);
      return true;
    });
    return;
  }
  // omega == 5: remove a minimum-degree vertex, lift a refined 3-cover of its
  // neighborhood.
  int v = g.min_degree_vertex();
  std::vector<int> others;
  for (int u = 0; u < g.size(); ++u)
    if (u != v) others.push_back(u);
  Graph::Induced rest = g.induced(others);
  SetAccumulator inner(4);
  cover4(rest.graph, inner);
  lift(inner.cliques, rest.to_parent);
  for (size_t i = 0; i < inner.cliques.size(); ++i)
    out.add(std::move(inner.cliques[i]), inner.tags[i]);

  if (!g.neighbors(v).empty()) {
    Graph::Induced hood = g.induced(g.neighbors(v));
    Build3CoverResult refined = refine_3cover(hood.graph, build_3cover(hood.graph));
    std::vector<std::vector<int>> lifted = refined.cert.cliques;
    lift(lifted, hood.to_parent);
    for (auto& clique : lifted) {
      clique.push_back(v);
      std::sort(clique.begin(), clique.end());
      out.add(std::move(clique), Provenance::extension);
    }
  }
}

}  // namespace

CoverCertificate build_4cover(const Graph& g) {
  SetAccumulator out(4);
  cover4(g, out);
  return finish_certificate(g, 4, std::move(out), nullptr);
}

}  // namespace cliquecover
