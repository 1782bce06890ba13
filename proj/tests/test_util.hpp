#ifndef SZX_TEST_UTIL_HPP
#define SZX_TEST_UTIL_HPP

// Test-side oracles and random graph generators. Everything here is kept
// independent of the library's BFS/bitset code paths on purpose: plain
// vectors, Floyd-Warshall, queue-free DFS.

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "szx/graph.hpp"

namespace szx::test {

using Rng = std::mt19937;

// Floyd-Warshall over an explicit edge list.
inline std::vector<std::vector<int>> fw_distances(int n,
    const std::vector<std::pair<int, int>>& edges) {
  const int inf = kUnreachable;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : edges) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Recursion-free DFS connectivity on an edge list, optionally with one
// vertex deleted.
inline bool dfs_connected(int n, const std::vector<std::pair<int, int>>& edges,
                          int deleted = -1) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    if (u == deleted || v == deleted) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int start = deleted == 0 ? 1 : 0;
  int expect = deleted < 0 ? n : n - 1;
  if (expect <= 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return reached == expect;
}

// Uniform random tree via a Pruefer sequence.
inline Graph random_tree(int n, Rng& rng) {
  Graph g(n);
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(n - 2);
  for (int& s : seq) s = pick(rng);
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  std::vector<bool> used(n, false);
  for (int s : seq) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1 && !used[v]) {
        leaf = v;
        break;
      }
    g.add_edge(leaf, s);
    used[leaf] = true;
    --deg[s];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (!used[v] && deg[v] == 1) (a < 0 ? a : b) = v;
  g.add_edge(a, b);
  return g;
}

// Random connected graph: spanning tree plus extra random non-edges.
inline Graph random_connected(int n, int extra_edges, Rng& rng) {
  Graph g = random_tree(n, rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  int max_extra = n * (n - 1) / 2 - (n - 1);
  extra_edges = std::min(extra_edges, max_extra);
  while (extra_edges > 0) {
    int u = pick(rng), v = pick(rng);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    --extra_edges;
  }
  return g;
}

// Random connected bipartite graph: alternating spanning tree on parts
// {0..left-1} and {left..n-1}, plus random cross edges.
inline Graph random_bipartite_connected(int left, int right, int extra_edges,
                                        Rng& rng) {
  int n = left + right;
  Graph g(n);
  // Grow the tree vertex by vertex, attaching to a random opposite-side
  // vertex already in the tree.
  std::vector<int> in_left{0}, in_right;
  for (int v = left; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(in_left.size()) - 1);
    g.add_edge(v, in_left[pick(rng)]);
    in_right.push_back(v);
  }
  for (int v = 1; v < left; ++v) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(in_right.size()) - 1);
    g.add_edge(v, in_right[pick(rng)]);
    in_left.push_back(v);
  }
  std::uniform_int_distribution<int> pl(0, left - 1), pr(left, n - 1);
  int max_extra = left * right - (n - 1);
  extra_edges = std::min(extra_edges, max_extra);
  while (extra_edges > 0) {
    int u = pl(rng), v = pr(rng);
    if (g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    --extra_edges;
  }
  return g;
}

// Random (not necessarily connected) graph with edge probability p.
inline Graph random_graph(int n, double p, Rng& rng) {
  Graph g(n);
  std::bernoulli_distribution flip(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Brute-force edge partition straight from the definition, using the
// Floyd-Warshall oracle rather than library BFS.
struct BrutePartition {
  int n_u = 0, n_v = 0, n_0 = 0;
};

inline BrutePartition brute_partition(const Graph& g, int u, int v) {
  auto d = fw_distances(g.vertex_count(), g.edges());
  BrutePartition p;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (d[u][w] < d[v][w])
      ++p.n_u;
    else if (d[v][w] < d[u][w])
      ++p.n_v;
    else
      ++p.n_0;
  }
  return p;
}

}  // namespace szx::test

#endif  // SZX_TEST_UTIL_HPP
