#include "cliquecover/partition.hpp"

#include <algorithm>
#include <sstream>

#include "cliquecover/cliques.hpp"

namespace cliquecover {

std::vector<int> CliquePartition::sizes() const {
  std::vector<int> out;
  out.reserve(parts.size());
  for (const auto& part : parts) out.push_back(static_cast<int>(part.size()));
  return out;
}

CliquePartition greedy_partition(const Graph& g) {
  CliquePartition p;
  VertexSet remaining = g.vertex_set();
  while (!remaining.empty()) {
    std::vector<int> part = max_clique_in(g, remaining);
    for (int v : part) remaining.remove(v);
    p.parts.push_back(std::move(part));
  }
  return p;
}

namespace {

std::string show(const std::vector<int>& verts) {
  std::ostringstream ss;
  ss << "{";
  for (size_t i = 0; i < verts.size(); ++i) ss << (i ? "," : "") << verts[i];
  ss << "}";
  return ss.str();
}

PartitionCheck fail(const std::string& msg) { return {false, msg}; }

}  // namespace

PartitionCheck verify_partition(const Graph& g, const CliquePartition& p) {
  int n = g.size();
  // Parts partition the vertex set.
  VertexSet seen(n);
  for (size_t i = 0; i < p.parts.size(); ++i) {
    const auto& part = p.parts[i];
    if (part.empty()) return fail("part " + std::to_string(i) + " is empty");
    for (int v : part) {
      if (v < 0 || v >= n)
        return fail("part " + std::to_string(i) + " contains out-of-range vertex " +
                    std::to_string(v));
      if (seen.contains(v))
        return fail("vertex " + std::to_string(v) + " appears in more than one part");
      seen.add(v);
    }
  }
  if (seen.count() != n) {
    for (int v = 0; v < n; ++v)
      if (!seen.contains(v)) return fail("vertex " + std::to_string(v) + " is not covered");
  }
  // Each part is a clique.
  for (size_t i = 0; i < p.parts.size(); ++i) {
    const auto& part = p.parts[i];
    for (size_t a = 0; a < part.size(); ++a)
      for (size_t b = a + 1; b < part.size(); ++b)
        if (!g.adjacent(part[a], part[b]))
          return fail("part " + std::to_string(i) + " " + show(part) + " is not a clique: " +
                      std::to_string(part[a]) + " and " + std::to_string(part[b]) +
                      " are not adjacent");
  }
  // Sizes non-increasing.
  for (size_t i = 1; i < p.parts.size(); ++i)
    if (p.parts[i].size() > p.parts[i - 1].size())
      return fail("part sizes increase at index " + std::to_string(i));
  // Each part is a maximum clique of the residual graph.
  VertexSet residual = g.vertex_set();
  for (size_t i = 0; i < p.parts.size(); ++i) {
    int omega = clique_number_in(g, residual);
    if (static_cast<int>(p.parts[i].size()) != omega)
      return fail("part " + std::to_string(i) + " " + show(p.parts[i]) +
                  " is not a maximum clique of the residual graph (size " +
                  std::to_string(p.parts[i].size()) + ", maximum " + std::to_string(omega) + ")");
    for (int v : p.parts[i]) residual.remove(v);
  }
  // Every vertex of a later part has a non-neighbor in each earlier part.
  for (size_t i = 0; i < p.parts.size(); ++i) {
    VertexSet part_i(n);
    for (int v : p.parts[i]) part_i.add(v);
    for (size_t j = i + 1; j < p.parts.size(); ++j)
      for (int v : p.parts[j]) {
        VertexSet non = part_i;
        non -= g.neighbors(v);
        if (non.empty())
          return fail("vertex " + std::to_string(v) + " of part " + std::to_string(j) +
                      " is adjacent to all of part " + std::to_string(i));
      }
  }
  // The union of parts of size <= 2 is triangle-free; singleton parts span no edge.
  VertexSet small(n), single(n);
  for (const auto& part : p.parts) {
    if (part.size() <= 2)
      for (int v : part) small.add(v);
    if (part.size() == 1) single.add(part[0]);
  }
  if (count_cliques_in(g, 3, small) != 0)
    return fail("parts of size <= 2 span a triangle");
  if (count_cliques_in(g, 2, single) != 0)
    return fail("singleton parts span an edge");
  // Part count against order minus minimum degree.
  int bound = n - g.min_degree();
  if (p.part_count() > bound)
    return fail("part count " + std::to_string(p.part_count()) + " exceeds n - min_degree = " +
                std::to_string(bound));
  return {};
}

}  // namespace cliquecover
