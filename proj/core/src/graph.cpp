#include "ssp/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ssp {

void Graph::throw_invalid(const std::string& what) { throw std::invalid_argument(what); }

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_)
    throw_invalid("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw_invalid("loops are not allowed");
  edges_.insert(make_pair_sorted(u, v));
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int u = 1; u <= n_; ++u) {
    if (u != v && has_edge(u, v)) out.push_back(u);
  }
  return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 1; u <= g.order(); ++u) {
    for (int v = u + 1; v <= g.order(); ++v) {
      if (!g.has_edge(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> dist(n + 1, std::vector<int>(n + 1, kInfiniteDistance));
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int s = 1; s <= n; ++s) {
    dist[s][s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (dist[s][w] == kInfiniteDistance) {
          dist[s][w] = dist[s][u] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

namespace {

Graph power_impl(const Graph& g, int r, bool exact) {
  if (r < 1) throw std::invalid_argument("power exponent must be >= 1");
  auto dist = distances(g);
  Graph p(g.order());
  for (int u = 1; u <= g.order(); ++u) {
    for (int v = u + 1; v <= g.order(); ++v) {
      int d = dist[u][v];
      if (d == kInfiniteDistance) continue;
      if (exact ? d == r : d <= r) p.add_edge(u, v);
    }
  }
  return p;
}

}  // namespace

Graph power(const Graph& g, int r) { return power_impl(g, r, false); }
Graph strong_power(const Graph& g, int r) { return power_impl(g, r, true); }

std::set<int> closed_neighborhood(const Graph& g, int v) {
  g.check_vertex(v);
  std::set<int> out{v};
  for (int u : g.neighbors(v)) out.insert(u);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = distances(g);
  for (int v = 2; v <= g.order(); ++v) {
    if (dist[1][v] == kInfiniteDistance) return false;
  }
  return true;
}

namespace {

// Shortest cycle length, or nullopt for forests. BFS from every vertex: a
// non-tree edge closing at level sums gives a cycle through the root.
std::optional<int> girth_of(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::optional<int> best;
  for (int s = 1; s <= n; ++s) {
    std::vector<int> dist(n + 1, -1), parent(n + 1, 0);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

// The unique cycle of a connected graph with |E| = |V|, in cyclic order.
std::vector<int> unicycle_of(const Graph& g) {
  // peel leaves until only the cycle remains
  const int n = g.order();
  std::vector<int> deg(n + 1, 0);
  std::vector<std::vector<int>> adj(n + 1);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
    ++deg[u];
    ++deg[v];
  }
  std::deque<int> leaves;
  std::vector<bool> removed(n + 1, false);
  for (int v = 1; v <= n; ++v) {
    if (deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    int v = leaves.front();
    leaves.pop_front();
    removed[v] = true;
    for (int u : adj[v]) {
      if (!removed[u] && --deg[u] == 1) leaves.push_back(u);
    }
  }
  int start = 0;
  for (int v = 1; v <= n; ++v) {
    if (!removed[v]) {
      start = v;
      break;
    }
  }
  std::vector<int> cycle{start};
  int prev = 0, cur = start;
  while (true) {
    int next = 0;
    for (int u : adj[cur]) {
      if (!removed[u] && u != prev) {
        next = u;
        break;
      }
    }
    if (next == start || next == 0) break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
  }
  return cycle;
}

}  // namespace

StructuralReport structural_predicates(const Graph& g) {
  StructuralReport rep;
  rep.connected = is_connected(g);
  rep.girth = girth_of(g);
  const int n = g.order();
  rep.is_tree = rep.connected && g.edge_count() == n - 1;
  rep.is_unicyclic = rep.connected && g.edge_count() == n;
  if (rep.is_unicyclic) rep.cycle_vertices = unicycle_of(g);
  for (int v = 1; v <= n; ++v) rep.degree_sequence.push_back(g.degree(v));
  std::sort(rep.degree_sequence.rbegin(), rep.degree_sequence.rend());
  return rep;
}

std::vector<std::vector<int>> pendant_paths(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;  // canonical form for dedup up to reversal
  for (int leaf = 1; leaf <= g.order(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    std::vector<int> path{leaf};
    int prev = 0, cur = leaf;
    while (g.degree(cur) <= 2) {
      int next = 0;
      for (int u : g.neighbors(cur)) {
        if (u != prev) {
          next = u;
          break;
        }
      }
      if (next == 0) break;  // reached the other leaf of a path graph
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    std::vector<int> rev(path.rbegin(), path.rend());
    std::vector<int> key = std::min(path, rev);
    if (seen.insert(key).second) out.push_back(path);
  }
  return out;
}

namespace {

void extend_induced(const Graph& g, std::vector<int>& path, std::vector<bool>& used, int max_len,
                    std::set<std::vector<int>>& seen, std::vector<std::vector<int>>& out) {
  if (path.size() >= 2) {
    std::vector<int> rev(path.rbegin(), path.rend());
    std::vector<int> key = std::min(path, rev);
    if (seen.insert(key).second) out.push_back(key);
  }
  if (static_cast<int>(path.size()) >= max_len) return;
  int tail = path.back();
  for (int u : g.neighbors(tail)) {
    if (used[u]) continue;
    bool induced = true;
    for (size_t k = 0; k + 1 < path.size(); ++k) {
      if (g.has_edge(path[k], u)) {
        induced = false;
        break;
      }
    }
    if (!induced) continue;
    path.push_back(u);
    used[u] = true;
    extend_induced(g, path, used, max_len, seen, out);
    used[u] = false;
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> induced_paths(const Graph& g, int max_len) {
  if (max_len < 2) throw std::invalid_argument("max_len must be >= 2");
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> seen;
  std::vector<bool> used(g.order() + 1, false);
  for (int v = 1; v <= g.order(); ++v) {
    std::vector<int> path{v};
    used[v] = true;
    extend_induced(g, path, used, max_len, seen, out);
    used[v] = false;
  }
  return out;
}

}  // namespace ssp
