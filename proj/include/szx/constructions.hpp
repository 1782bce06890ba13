#ifndef SZX_CONSTRUCTIONS_HPP
#define SZX_CONSTRUCTIONS_HPP

#include <variant>
#include <vector>

#include "szx/graph.hpp"
#include "szx/indices.hpp"

namespace szx {

// Theta skeleton: two hubs joined by internally disjoint paths of lengths
// a <= b <= c. b >= 2 keeps the graph simple (at most one length-1 path).
struct ThetaShape {
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const ThetaShape&, const ThetaShape&) = default;
  int vertex_count() const noexcept { return a + b + c - 1; }
};

// Dumbbell skeleton: cycles of lengths p <= q joined by a path of length
// t >= 0 (t = 0 means the cycles share one vertex).
struct DumbbellShape {
  int p = 0;
  int q = 0;
  int t = 0;

  friend bool operator==(const DumbbellShape&, const DumbbellShape&) = default;
  int vertex_count() const noexcept { return p + q + t - 1; }
};

using SkeletonShape = std::variant<ThetaShape, DumbbellShape>;

int skeleton_vertex_count(const SkeletonShape& shape);

// Cycle C_{n-1} on vertices 0..n-2 plus vertex n-1 adjacent to the two
// neighbors of vertex 0. The conjectured unique maximizer for n >= 6.
Graph build_bn(int n);

// Vertex layout: hub x = 0, hub y = 1, then path interiors in order (a-path
// first). Fixed so tests can name edges deterministically.
Graph build_theta(int a, int b, int c);
Graph build_theta(const ThetaShape& shape);

// Vertex on the i-th path (0-based) at the given position along it;
// position 0 is hub x, position L is hub y.
int theta_path_vertex(const ThetaShape& shape, int path, int position);

// Vertex layout: cycle C_p on 0..p-1 with junction u = 0; for t = 0 the
// second cycle is 0,p,..,p+q-2; otherwise C_q sits on p..p+q-1 with
// junction v = p and the connecting path interiors come last.
Graph build_dumbbell(int p, int q, int t);

// Adds vertex g.n adjacent only to `at`.
Graph attach_pendant(const Graph& g, int at);

// The three positions the two hubs can take in the partition of an edge of
// a theta graph: in different proper sets, in the same proper set, or at
// least one hub equidistant.
enum class ThetaEdgeCase { DifferentSets, SameSet, HubEquidistant };

const char* to_string(ThetaEdgeCase c);

struct ThetaEdgeAnalysis {
  int u = -1;
  int v = -1;
  ThetaEdgeCase kind = ThetaEdgeCase::DifferentSets;
  int hub_dist_x = 0;   // min over endpoints of d(x, .)
  int hub_dist_y = 0;   // min over endpoints of d(y, .)
  int cycle_len = 0;    // shortest cycle through the edge
  int predicted = 0;    // |hub_dist_y - hub_dist_x| / n - g / a - 1 by case
  bool predicted_is_lower_bound = false;  // true only for HubEquidistant
  int actual = 0;       // |n_u - n_v|
  bool middle_of_odd_path = false;
};

// Classifies edge uv of build_theta(shape) into its case and fills both the
// case prediction and the measured |n_u - n_v|.
ThetaEdgeAnalysis analyze_theta_edge(const ThetaShape& shape, int u, int v);

// Analysis of every edge, in edge-list order.
std::vector<ThetaEdgeAnalysis> analyze_theta_edges(const ThetaShape& shape);

}  // namespace szx

#endif  // SZX_CONSTRUCTIONS_HPP
