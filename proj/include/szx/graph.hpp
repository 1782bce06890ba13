#ifndef SZX_GRAPH_HPP
#define SZX_GRAPH_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "szx/errors.hpp"

namespace szx {

// Adjacency is kept as one 64-bit neighbor mask per vertex, so vertex count
// is capped at 64. graph6 I/O is further capped at 62 by the format header.
inline constexpr int kMaxVertices = 64;

// Distance sentinel for vertex pairs with no connecting path. Strictly larger
// than any attainable distance so comparisons stay integer-only.
inline constexpr int kUnreachable = 1 << 20;

// Simple undirected graph on vertices 0..n-1. No self-loops, no parallel
// edges. Immutable by convention once fully constructed; safe to share
// across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return m_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  std::uint64_t neighbors(int v) const;
  int degree(int v) const;

  // Edge list sorted lexicographically, each pair with u < v.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Relabels g: vertex v of the input becomes perm[v] of the output.
// perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Symmetric matrix of hop distances with zero diagonal; kUnreachable marks
// disconnected pairs.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> data);

  int size() const noexcept { return n_; }
  int at(int u, int v) const { return data_[static_cast<std::size_t>(u) * n_ + v]; }

 private:
  int n_ = 0;
  std::vector<int> data_;
};

// Hop distances from source via breadth-first search.
std::vector<int> bfs_distances(const Graph& g, int source);

// One BFS sweep per vertex.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// Articulation vertices of a connected graph, sorted ascending.
std::vector<int> cut_vertices(const Graph& g);

int min_degree(const Graph& g);

// The three structural cases a connected bicyclic graph falls into:
// a pendant edge exists, or there is a cut vertex but no pendant, or the
// graph is 2-connected (a theta graph: two degree-3 hubs joined by three
// internally disjoint paths).
struct BicyclicClass {
  enum class Kind { Pendant, CutVertex, Theta };

  Kind kind = Kind::Pendant;
  int witness = -1;  // a pendant vertex (Pendant) or a cut vertex (CutVertex)
  int hub_x = -1;    // Theta only: the two degree-3 vertices
  int hub_y = -1;
  std::array<int, 3> path_lengths{0, 0, 0};  // Theta only, sorted ascending
};

const char* to_string(BicyclicClass::Kind kind);

// Classifies a connected graph with m = n+1 into exactly one of the three
// cases. Throws std::invalid_argument on non-bicyclic input.
BicyclicClass classify_bicyclic(const Graph& g);

// Length of the shortest cycle containing edge uv, computed as 1 plus the
// shortest u-v path with the edge removed. Throws if uv is a bridge.
int shortest_cycle_through_edge(const Graph& g, int u, int v);

// graph6 codec, bit-exact: header byte n+63 (1 <= n <= 62), then the upper
// triangle x01, x02, x12, x03, ... packed big-endian six bits per byte, each
// byte offset by 63, final group zero-filled.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Canonical label: the graph6 string of the relabeling that minimizes the
// upper-triangle bit string lexicographically over all vertex orderings.
// Equal canonical forms iff isomorphic. Supports n <= 16.
std::string canonical_form(const Graph& g);

namespace detail {
// Canonical form working directly on neighbor masks (enumeration hot path).
std::string canonical_graph6(const std::uint64_t* adj, int n);
bool connected_masks(const std::uint64_t* adj, int n);
}  // namespace detail

}  // namespace szx

#endif  // SZX_GRAPH_HPP
