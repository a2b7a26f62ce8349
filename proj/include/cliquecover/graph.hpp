#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliquecover {

// Fixed-capacity bitset over vertex indices 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int capacity)
      : n_(capacity), words_((capacity + 63) / 64, 0) {}

  static VertexSet full(int capacity) {
    VertexSet s(capacity);
    for (int v = 0; v < capacity; ++v) s.add(v);
    return s;
  }

  int capacity() const { return n_; }

  bool contains(int v) const {
    return (words_[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  void add(int v) { words_[static_cast<size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void remove(int v) { words_[static_cast<size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  // Smallest member, or -1.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
    return -1;
  }

  // Smallest member greater than v, or -1.
  int next(int v) const {
    if (v + 1 >= n_) return -1;
    size_t i = static_cast<size_t>(v + 1) >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
    while (true) {
      if (w) return static_cast<int>(i * 64 + __builtin_ctzll(w));
      if (++i >= words_.size()) return -1;
      w = words_[i];
    }
  }

  // Drop every member <= v.
  void remove_upto(int v) {
    if (v < 0) return;
    size_t i = static_cast<size_t>(v) >> 6;
    for (size_t k = 0; k < i && k < words_.size(); ++k) words_[k] = 0;
    if (i < words_.size()) {
      int r = v & 63;
      if (r == 63) words_[i] = 0;
      else words_[i] &= ~std::uint64_t{0} << (r + 1);
    }
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& o) const = default;

  bool is_subset_of(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v != -1; v = next(v)) out.push_back(v);
    return out;
  }

  struct iterator {
    const VertexSet* s;
    int v;
    int operator*() const { return v; }
    iterator& operator++() {
      v = s->next(v);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v != o.v; }
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

// Simple undirected graph with bitset adjacency rows. Vertices are 0..n-1.
class Graph {
 public:
  explicit Graph(int n);  // throws std::invalid_argument unless n >= 1

  int size() const { return n_; }
  long long edge_count() const { return m_; }

  void add_edge(int u, int v);     // rejects self-loops, out-of-range, duplicates
  void remove_edge(int u, int v);  // rejects missing edges
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  bool has_edge(int u, int v) const {
    return u >= 0 && v >= 0 && u < n_ && v < n_ && u != v && adjacent(u, v);
  }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  int min_degree() const;
  // Smallest vertex index among those of minimum degree.
  int min_degree_vertex() const;

  VertexSet vertex_set() const { return VertexSet::full(n_); }

  // Edges in lexicographic order as (u, v) with u < v.
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;

  struct Induced;  // { Graph graph; std::vector<int> to_parent; }, defined below
  // verts must be nonempty, in range and duplicate-free; order is ignored.
  Induced induced(const std::vector<int>& verts) const;
  Induced induced(const VertexSet& verts) const;

 private:
  int n_;
  long long m_ = 0;
  std::vector<VertexSet> adj_;
};

struct Graph::Induced {
  Graph graph;
  std::vector<int> to_parent;  // local index -> vertex of the host graph
};

// Balanced complete multipartite graph on n vertices and t parts; parts are
// residue classes mod t, so labeling is deterministic.
Graph turan_graph(int n, int t);

// Wire format: '#' comments and blank lines ignored; first payload line is n,
// every following line one edge "u v". Duplicate edges, self-loops, vertex
// indices out of range and trailing junk raise ParseError with a line number.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace cliquecover
