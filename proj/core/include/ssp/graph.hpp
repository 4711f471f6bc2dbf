#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ssp {

using VertexPair = std::pair<int, int>;  // always stored with first < second

inline VertexPair make_pair_sorted(int u, int v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

/// Simple undirected graph on vertices 1..n, edges stored canonically (u < v).
class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 0) throw_invalid("vertex count must be nonnegative");
  }
  Graph(int n, const std::vector<VertexPair>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return edges_.count(make_pair_sorted(u, v)) > 0; }
  const std::set<VertexPair>& edges() const { return edges_; }
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  void check_vertex(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  [[noreturn]] static void throw_invalid(const std::string& what);
  int n_;
  std::set<VertexPair> edges_;
};

constexpr int kInfiniteDistance = -1;

Graph complement(const Graph& g);
Graph power(const Graph& g, int r);
Graph strong_power(const Graph& g, int r);

std::set<int> closed_neighborhood(const Graph& g, int v);

/// BFS hop distances; kInfiniteDistance marks unreachable pairs.
/// 1-indexed: dist[u][v] for u,v in 1..n (row/col 0 unused).
std::vector<std::vector<int>> distances(const Graph& g);

struct StructuralReport {
  bool connected = false;
  std::optional<int> girth;         // nullopt for forests ("infinite")
  bool is_unicyclic = false;
  bool is_tree = false;
  std::vector<int> cycle_vertices;  // unique cycle in cyclic order (unicyclic only)
  std::vector<int> degree_sequence; // sorted descending
};

StructuralReport structural_predicates(const Graph& g);

/// Maximal pendant paths, leaf first; the last vertex is the only one with
/// edges to the rest of the graph. A path graph yields itself (one entry).
std::vector<std::vector<int>> pendant_paths(const Graph& g);

/// Induced paths on 2..max_len vertices, deduplicated up to reversal.
std::vector<std::vector<int>> induced_paths(const Graph& g, int max_len);

bool is_connected(const Graph& g);

}  // namespace ssp
