#include "cliquecover/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cliquecover {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph order must be at least 1, got " + std::to_string(n));
  adj_.assign(n, VertexSet(n));
}

static void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (adj_[u].contains(v))
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  adj_[u].add(v);
  adj_[v].add(u);
  ++m_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u, n_);
  check_vertex(v, n_);
  if (u == v || !adj_[u].contains(v))
    throw std::invalid_argument("no edge " + std::to_string(u) + " " + std::to_string(v));
  adj_[u].remove(v);
  adj_[v].remove(u);
  --m_;
}

int Graph::min_degree() const { return degree(min_degree_vertex()); }

int Graph::min_degree_vertex() const {
  int best = 0, best_deg = degree(0);
  for (int v = 1; v < n_; ++v) {
    int d = degree(v);
    if (d < best_deg) {
      best = v;
      best_deg = d;
    }
  }
  return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  Graph c(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph::Induced Graph::induced(const std::vector<int>& verts) const {
  std::vector<int> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) throw std::invalid_argument("induced subgraph needs at least one vertex");
  for (size_t i = 0; i < sorted.size(); ++i) {
    check_vertex(sorted[i], n_);
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw std::invalid_argument("duplicate vertex " + std::to_string(sorted[i]) +
                                  " in induced subgraph");
  }
  Graph sub(static_cast<int>(sorted.size()));
  for (size_t i = 0; i < sorted.size(); ++i)
    for (size_t j = i + 1; j < sorted.size(); ++j)
      if (adjacent(sorted[i], sorted[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  return {std::move(sub), std::move(sorted)};
}

Graph::Induced Graph::induced(const VertexSet& verts) const { return induced(verts.to_vector()); }

Graph turan_graph(int n, int t) {
  if (n < 1) throw std::invalid_argument("turan_graph: n must be at least 1");
  if (t < 1) throw std::invalid_argument("turan_graph: t must be at least 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u % t != v % t) g.add_edge(u, v);
  return g;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  Graph g(1);
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ss(line);
    if (n < 0) {
      long long value;
      if (!(ss >> value)) throw ParseError("expected the vertex count", line_no);
      std::string rest;
      if (ss >> rest) throw ParseError("trailing data after the vertex count: '" + rest + "'", line_no);
      if (value < 1 || value > 1'000'000)
        throw ParseError("vertex count must be in [1, 1000000], got " + std::to_string(value), line_no);
      n = static_cast<int>(value);
      g = Graph(n);
      continue;
    }
    long long u, v;
    if (!(ss >> u)) throw ParseError("expected an edge 'u v'", line_no);
    if (!(ss >> v)) throw ParseError("edge is missing its second endpoint", line_no);
    std::string rest;
    if (ss >> rest) throw ParseError("trailing data after the edge: '" + rest + "'", line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("edge " + std::to_string(u) + " " + std::to_string(v) +
                       " out of range for " + std::to_string(n) + " vertices", line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_no);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("missing vertex count", line_no);
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.size() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace cliquecover
